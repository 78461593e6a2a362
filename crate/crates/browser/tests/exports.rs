use groupscope_browser::{aut_counts_json, check_theorem_json, group_info_json, theorem_ids};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn info_of_quaternion() {
    let v = parse(group_info_json("Q(8)").unwrap());
    assert_eq!(v["order"], 8);
    assert_eq!(v["class"], 2);
    assert_eq!(v["center_order"], 2);
    assert_eq!(v["table"].as_array().unwrap().len(), 8);
    assert_eq!(v["purely_nonabelian"], true);
}

#[test]
fn counts_of_dihedral_8() {
    let v = parse(aut_counts_json("D(4)").unwrap());
    assert_eq!(v["full"], 8);
    assert_eq!(v["central"], 4);
    assert_eq!(v["class_preserving"][0], 4);
    assert_eq!(v["center_fixing"], 4);
}

#[test]
fn theorem_report() {
    let v = parse(check_theorem_json("T3.4", "D(4)").unwrap());
    assert_eq!(v["status"], "PASSED");
    assert_eq!(v["schema"], 1);
    assert_eq!(parse(theorem_ids()).as_array().unwrap().len(), 17);
}

#[test]
fn errors_are_messages() {
    assert!(group_info_json("Q(6)")
        .unwrap_err()
        .contains("bad parameter"));
    assert!(group_info_json("C(128)").unwrap_err().contains("cap"));
    assert!(check_theorem_json("X1", "C(2)").is_err());
}
