//! Built-in group families, each turned into a Cayley table through its
//! normal form `a^i b^j` (or coordinate tuples for the abelian and
//! Heisenberg families).

use crate::dsl::{GroupExpr, GroupSpec};
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::product::{self, ProductStructure};

pub const MAX_ORDER_ENV: &str = "GROUPSCOPE_MAX_ORDER";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: product::DEFAULT_ORDER_CAP,
        }
    }
}

impl Limits {
    /// Default limits, with `GROUPSCOPE_MAX_ORDER` taking precedence.
    pub fn from_env() -> Result<Limits> {
        match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => Limits::from_env_value(&v),
            Err(_) => Ok(Limits::default()),
        }
    }

    /// Limits from a `GROUPSCOPE_MAX_ORDER` value: a positive integer.
    pub fn from_env_value(v: &str) -> Result<Limits> {
        match v.trim().parse() {
            Ok(max_order) if max_order > 0 => Ok(Limits { max_order }),
            _ => Err(GroupError::BadParameter(format!("{MAX_ORDER_ENV}={v}"))),
        }
    }
}

/// Groups exercised by the theorem corpus, smallest first.
pub const CORPUS: &[&str] = &[
    "C(1)",
    "C(2)",
    "C(3)",
    "C(4)",
    "Ab(2; 1, 1)",
    "D(3)",
    "C(8)",
    "Ab(2; 2, 1)",
    "Ab(2; 1, 1, 1)",
    "D(4)",
    "Q(8)",
    "C(9)",
    "Ab(3; 1, 1)",
    "Ab(2; 2, 2)",
    "Ab(2; 3, 1)",
    "D(8)",
    "Q(16)",
    "SD(16)",
    "Mod(2, 4)",
    "D(4) x C(2)",
    "Q(8) x C(2)",
    "D(4) x C(3)",
    "Q(8) x C(3)",
    "Heis(3)",
    "Mod(3, 3)",
    "Ab(3; 2, 1)",
    "D(16)",
    "Q(32)",
    "SD(32)",
    "Mod(2, 5)",
    "D(8) x C(2)",
    "D(4) x C(4)",
    "Q(8) x C(4)",
    "D(4) x C(2) x C(2)",
    "Heis(3) x C(3)",
    "Mod(3, 4)",
];

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn power_label(base: &str, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

fn word_label(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|&(b, i)| power_label(b, i)).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::BadParameter("C(0)".into()));
    }
    let labels = (0..n).map(|i| word_label(&[("a", i)])).collect();
    FiniteGroup::from_fn(n, Some(labels), |a, b| (a + b) % n)
}

/// `C_{p^e1} × ⋯`, elements as coordinate tuples (first exponent most
/// significant).
pub fn abelian_p_group(p: u64, exponents: &[u32]) -> Result<FiniteGroup> {
    if !is_prime(p) || exponents.contains(&0) {
        return Err(GroupError::BadParameter(format!("Ab({p}; {exponents:?})")));
    }
    let moduli: Vec<usize> = exponents.iter().map(|&e| (p as usize).pow(e)).collect();
    let order: usize = moduli.iter().product();
    let split = |mut x: usize| {
        let mut t = vec![0; moduli.len()];
        for (slot, &m) in t.iter_mut().zip(&moduli).rev() {
            *slot = x % m;
            x /= m;
        }
        t
    };
    let labels = (0..order)
        .map(|x| {
            let t: Vec<String> = split(x).iter().map(usize::to_string).collect();
            format!("({})", t.join(","))
        })
        .collect();
    FiniteGroup::from_fn(order, Some(labels), |a, b| {
        split(a)
            .iter()
            .zip(split(b))
            .zip(&moduli)
            .fold(0, |acc, ((&x, y), &m)| acc * m + (x + y) % m)
    })
}

/// Dihedral group of order `2n`: `r^i s^j ↦ i + n·j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::BadParameter("D(0)".into()));
    }
    let labels = (0..2 * n)
        .map(|x| word_label(&[("r", x % n), ("s", x / n)]))
        .collect();
    FiniteGroup::from_fn(2 * n, Some(labels), |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let k = if j == 1 { (n - k) % n } else { k };
        (i + k) % n + n * ((j + l) % 2)
    })
}

fn log2_exact(n: usize) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// Generalized quaternion group of the given order:
/// `⟨a, b | a^{2t} = 1, b² = a^t, b⁻¹ab = a⁻¹⟩` with order `4t`.
pub fn quaternion(order: usize) -> Result<FiniteGroup> {
    if log2_exact(order).is_none_or(|k| k < 3) {
        return Err(GroupError::BadParameter(format!("Q({order})")));
    }
    let m = order / 2;
    let t = order / 4;
    let labels = (0..order)
        .map(|x| word_label(&[("a", x % m), ("b", x / m)]))
        .collect();
    FiniteGroup::from_fn(order, Some(labels), |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let k = if j == 1 { (m - k) % m } else { k };
        let mut e = (i + k) % m;
        let mut s = j + l;
        if s == 2 {
            e = (e + t) % m;
            s = 0;
        }
        e + m * s
    })
}

/// Semidihedral group of order `2^k`, `k ≥ 4`:
/// `⟨a, b | a^{2^{k-1}} = b² = 1, bab = a^{2^{k-2}-1}⟩`.
pub fn semidihedral(order: usize) -> Result<FiniteGroup> {
    if log2_exact(order).is_none_or(|k| k < 4) {
        return Err(GroupError::BadParameter(format!("SD({order})")));
    }
    let m = order / 2;
    let twist = m / 2 - 1;
    let labels = (0..order)
        .map(|x| word_label(&[("a", x % m), ("b", x / m)]))
        .collect();
    FiniteGroup::from_fn(order, Some(labels), |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let k = if j == 1 { k * twist % m } else { k };
        (i + k) % m + m * ((j + l) % 2)
    })
}

fn mod_inverse(u: usize, n: usize) -> usize {
    (1..n).find(|&v| u * v % n == 1).unwrap_or(1)
}

/// Modular p-group of order `p^k`:
/// `⟨a, b | a^{p^{k-1}} = b^p = 1, b⁻¹ab = a^{1+p^{k-2}}⟩`.
pub fn modular(p: u64, k: u32) -> Result<FiniteGroup> {
    let min_k = if p == 2 { 4 } else { 3 };
    if !is_prime(p) || k < min_k {
        return Err(GroupError::BadParameter(format!("Mod({p}, {k})")));
    }
    let p = p as usize;
    let m = p.pow(k - 1);
    let t = 1 + p.pow(k - 2);
    // b^j a^k = a^{k·u^j} b^j with u = t⁻¹.
    let u = mod_inverse(t, m);
    let twists: Vec<usize> = (0..p)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = *acc * u % m;
            Some(cur)
        })
        .collect();
    let order = m * p;
    let labels = (0..order)
        .map(|x| word_label(&[("a", x % m), ("b", x / m)]))
        .collect();
    FiniteGroup::from_fn(order, Some(labels), |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        (i + k * twists[j]) % m + m * ((j + l) % p)
    })
}

/// Upper unitriangular 3×3 matrices over `F_p`; `(a, b, c)` is the matrix
/// with `a`, `b` on the superdiagonal and `c` in the corner.
pub fn heisenberg(p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(GroupError::BadParameter(format!("Heis({p})")));
    }
    let p = p as usize;
    let split = |x: usize| (x / (p * p), x / p % p, x % p);
    let labels = (0..p * p * p)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("({a},{b},{c})")
        })
        .collect();
    FiniteGroup::from_fn(p * p * p, Some(labels), |x, y| {
        let (a, b, c) = split(x);
        let (d, e, f) = split(y);
        ((a + d) % p) * p * p + ((b + e) % p) * p + (c + f + a * e) % p
    })
}

/// Symmetric group on `n ≤ 6` points, permutations in lexicographic order.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(GroupError::BadParameter(format!("S({n})")));
    }
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..n {
            for rest in perms(n - 1) {
                let mut p = vec![first];
                p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
                out.push(p);
            }
        }
        out
    }
    let all = perms(n);
    let labels = all.iter().map(|p| format!("{p:?}")).collect();
    FiniteGroup::from_fn(all.len(), Some(labels), |a, b| {
        let composed: Vec<usize> = (0..n).map(|x| all[a][all[b][x]]).collect();
        all.binary_search(&composed).expect("closed")
    })
}

fn check_order(expr: &GroupExpr, limits: &Limits) -> Result<()> {
    let order = expr.order();
    if order > limits.max_order {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: limits.max_order,
        });
    }
    Ok(())
}

fn build(expr: &GroupExpr, limits: &Limits) -> Result<FiniteGroup> {
    match expr {
        GroupExpr::Cyclic(n) => cyclic(*n),
        GroupExpr::Abelian { p, exponents } => abelian_p_group(*p, exponents),
        GroupExpr::Dihedral(n) => dihedral(*n),
        GroupExpr::Quaternion(n) => quaternion(*n),
        GroupExpr::SemiDihedral(n) => semidihedral(*n),
        GroupExpr::Modular { p, k } => modular(*p, *k),
        GroupExpr::Heisenberg(p) => heisenberg(*p),
        GroupExpr::Product(_) => Ok(build_product(expr, limits)?.product),
    }
}

fn build_product(expr: &GroupExpr, limits: &Limits) -> Result<ProductStructure> {
    let factors = expr
        .factors()
        .iter()
        .map(|f| build(f, limits))
        .collect::<Result<Vec<_>>>()?;
    product::direct_product_with_cap(&factors, limits.max_order)
}

pub fn construct(spec: &GroupSpec, limits: &Limits) -> Result<FiniteGroup> {
    check_order(&spec.ast, limits)?;
    build(&spec.ast, limits)
}

/// The product structure of a top-level product spec (a single factor for
/// anything else).
pub fn construct_product(spec: &GroupSpec, limits: &Limits) -> Result<ProductStructure> {
    check_order(&spec.ast, limits)?;
    build_product(&spec.ast, limits)
}

/// Parses and builds with default limits.
pub fn construct_str(source: &str) -> Result<FiniteGroup> {
    construct(&GroupSpec::parse(source)?, &Limits::default())
}
