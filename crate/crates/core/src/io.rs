//! Cayley tables on disk: `{"order": n, "table": [[...]], "labels": [...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{self, FiniteGroup};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A loaded group plus the relabeling applied on load:
/// `permutation[new_index] = index_in_file`.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: FiniteGroup,
    pub permutation: Vec<usize>,
}

pub fn parse_cayley(text: &str) -> Result<LoadedGroup> {
    let file: CayleyFile =
        serde_json::from_str(text).map_err(|e| GroupError::Schema(e.to_string()))?;
    if file.table.len() != file.order {
        return Err(GroupError::Schema(format!(
            "order is {} but the table has {} rows",
            file.order,
            file.table.len()
        )));
    }
    if let Some(labels) = &file.labels {
        if labels.len() != file.order {
            return Err(GroupError::Schema(format!(
                "order is {} but there are {} labels",
                file.order,
                labels.len()
            )));
        }
    }
    let (group, permutation) = group::build_group_labeled(file.table, file.labels)?;
    Ok(LoadedGroup { group, permutation })
}

pub fn load_cayley(path: impl AsRef<Path>) -> Result<LoadedGroup> {
    parse_cayley(&std::fs::read_to_string(path)?)
}

pub fn to_cayley_json(g: &FiniteGroup) -> String {
    let file = CayleyFile {
        order: g.order(),
        table: g.rows(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&file).expect("serializable")
}

pub fn save_cayley(g: &FiniteGroup, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_cayley_json(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip() {
        let d4 = catalog::dihedral(4).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d4.json");
        save_cayley(&d4, &path).unwrap();
        let loaded = load_cayley(&path).unwrap();
        assert_eq!(loaded.group.rows(), d4.rows());
        assert_eq!(loaded.group.labels(), d4.labels());
        assert!(loaded.permutation.iter().enumerate().all(|(i, &p)| i == p));
    }

    #[test]
    fn s3_is_not_nilpotent() {
        let s3 = catalog::symmetric_group(3).unwrap();
        let loaded = parse_cayley(&to_cayley_json(&s3)).unwrap();
        assert_eq!(loaded.group.order(), 6);
        assert_eq!(
            group::nilpotency_class(&loaded.group),
            Err(GroupError::NotNilpotent)
        );
    }

    #[test]
    fn identity_moved_to_zero() {
        // C_2 with the identity stored at index 1.
        let loaded =
            parse_cayley(r#"{"order": 2, "table": [[1, 0], [0, 1]], "labels": ["b", "e"]}"#)
                .unwrap();
        assert_eq!(loaded.permutation, vec![1, 0]);
        assert_eq!(loaded.group.label(0), "e");
    }

    #[test]
    fn schema_errors() {
        for text in [
            "not json",
            r#"{"order": 2}"#,
            r#"{"order": 3, "table": [[0]]}"#,
            r#"{"order": 1, "table": [[0]], "extra": 1}"#,
            r#"{"order": 1, "table": [[0]], "labels": ["a", "b"]}"#,
        ] {
            assert!(
                matches!(parse_cayley(text), Err(GroupError::Schema(_))),
                "{text}"
            );
        }
        assert!(matches!(
            parse_cayley(r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#),
            Err(GroupError::NotAGroup(_))
        ));
    }
}
