//! Closed-form Turán values as exact big-integer functions.
//!
//! Every evaluator is also registered behind the [`Formula`] trait so the
//! CLI can select one by name at runtime. Where a theorem states an
//! explicit hypothesis on the parameters, the result carries an
//! `in_theorem_range` flag; where the hypothesis is only "n sufficiently
//! large" the flag stays unknown, since no finite threshold is available.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("unknown formula `{0}`")]
    Unknown(String),
    #[error("formula `{id}` needs parameter --{param}")]
    MissingParam {
        id: &'static str,
        param: &'static str,
    },
    #[error("formula `{id}`: {msg}")]
    Domain { id: &'static str, msg: String },
}

/// Parameter bundle shared by all formulas; each reads the fields it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: Option<u64>,
    pub l: Option<u64>,
    pub s: Option<u64>,
    pub r: Option<u64>,
}

impl Params {
    fn need(&self, id: &'static str, param: &'static str) -> Result<u64, FormulaError> {
        let v = match param {
            "n" => self.n,
            "l" => self.l,
            "s" => self.s,
            "r" => self.r,
            _ => unreachable!(),
        };
        v.ok_or(FormulaError::MissingParam { id, param })
    }
}

/// Exact value plus the identity of the formula that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub formula_id: String,
    pub params: Params,
    #[serde(serialize_with = "serialize_biguint")]
    pub value: BigUint,
    /// `Some(true)` / `Some(false)` when the source theorem has a checkable
    /// hypothesis, `None` when the hypothesis is an unquantified "large n".
    pub in_theorem_range: Option<bool>,
}

fn serialize_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Binomial coefficient by the multiplicative formula; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Balanced part sizes for an l-way split of n, larger parts first.
pub fn balanced_parts(n: u64, l: u64) -> Vec<u64> {
    assert!(l >= 1);
    let q = n / l;
    let rem = n % l;
    (0..l).map(|i| if i < rem { q + 1 } else { q }).collect()
}

/// Number of crossing r-sets over parts of the given sizes: the r-th
/// elementary symmetric polynomial of the sizes.
pub fn crossing_count(sizes: &[u64], r: u64) -> BigUint {
    let r = r as usize;
    let mut coeff: Vec<BigUint> = vec![BigUint::zero(); r + 1];
    coeff[0] = BigUint::from(1u32);
    for &s in sizes {
        for k in (1..=r).rev() {
            let add = &coeff[k - 1] * BigUint::from(s);
            coeff[k] += add;
        }
    }
    coeff[r].clone()
}

/// t(n, l): edges of the balanced complete l-partite graph.
pub fn t(n: u64, l: u64) -> Result<BigUint, FormulaError> {
    if l == 0 {
        return Err(FormulaError::Domain {
            id: "t",
            msg: "l must be at least 1".into(),
        });
    }
    Ok(crossing_count(&balanced_parts(n, l), 2))
}

/// g(n, l, s) = s(n-s) + t(s, l-1).
pub fn g(n: u64, l: u64, s: u64) -> Result<BigUint, FormulaError> {
    if l < 2 {
        return Err(FormulaError::Domain {
            id: "g",
            msg: "l must be at least 2".into(),
        });
    }
    if n < s {
        return Err(FormulaError::Domain {
            id: "g",
            msg: format!("n = {n} < s = {s}"),
        });
    }
    Ok(BigUint::from(s) * BigUint::from(n - s) + t(s, l - 1)?)
}

/// max{t(2s+1, l), g(n, l, s)} for the clique-and-matching bound at r = 2.
pub fn alon_frankl_value(n: u64, l: u64, s: u64) -> Result<BigUint, FormulaError> {
    if l < 2 {
        return Err(FormulaError::Domain {
            id: "alon-frankl",
            msg: "l must be at least 2".into(),
        });
    }
    if n < 2 * s + 1 {
        return Err(FormulaError::Domain {
            id: "alon-frankl",
            msg: format!("needs n >= 2s+1, got n = {n}, s = {s}"),
        });
    }
    Ok(t(2 * s + 1, l)?.max(g(n, l, s)?))
}

/// max{s(n-s) + C(s,2), C(2s+1,2)}: the graph matching bound.
pub fn erdos_gallai_value(n: u64, s: u64) -> BigUint {
    let near = BigUint::from(s) * BigUint::from(n.saturating_sub(s)) + binomial(s, 2);
    near.max(binomial(2 * s + 1, 2))
}

/// t_r(n, l): crossing r-sets of the balanced l-partition of the
/// vertex set.
pub fn t_r(n: u64, l: u64, r: u64) -> Result<BigUint, FormulaError> {
    if r < 2 || l < r {
        return Err(FormulaError::Domain {
            id: "t-r",
            msg: format!("needs l >= r >= 2, got l = {l}, r = {r}"),
        });
    }
    Ok(crossing_count(&balanced_parts(n, l), r))
}

/// Turán number of the pair-covered (l+1)-core family: t_r(n, l).
pub fn mubayi_value(n: u64, l: u64, r: u64) -> Result<BigUint, FormulaError> {
    t_r(n, l, r).map_err(|_| FormulaError::Domain {
        id: "mubayi",
        msg: format!("needs l >= r >= 2, got l = {l}, r = {r}"),
    })
}

/// C(n,r) - C(n-s,r) plus the explicit threshold flag n >= (2s+1)r - s.
pub fn frankl_value(n: u64, r: u64, s: u64) -> (BigUint, bool) {
    let value = binomial(n, r) - binomial(n.saturating_sub(s), r);
    let in_range = n >= ((2 * s + 1) * r).saturating_sub(s);
    (value, in_range)
}

/// s * t_{r-1}(n-s, l-1): the hypergraph clique-and-matching value.
pub fn main_value(n: u64, l: u64, s: u64, r: u64) -> Result<BigUint, FormulaError> {
    if r < 3 || l < r || s == 0 {
        return Err(FormulaError::Domain {
            id: "main",
            msg: format!("needs l >= r >= 3 and s >= 1, got l = {l}, r = {r}, s = {s}"),
        });
    }
    if n < s {
        return Err(FormulaError::Domain {
            id: "main",
            msg: format!("n = {n} < s = {s}"),
        });
    }
    Ok(BigUint::from(s) * t_r(n - s, l - 1, r - 1)?)
}

/// C(s,2)(n-s) + s*C(n-s,2) plus the threshold flag n >= 20s(s+1).
pub fn fano_value(n: u64, s: u64) -> Result<(BigUint, bool), FormulaError> {
    if n <= s {
        return Err(FormulaError::Domain {
            id: "fano",
            msg: format!("needs n > s, got n = {n}, s = {s}"),
        });
    }
    let value = binomial(s, 2) * BigUint::from(n - s) + BigUint::from(s) * binomial(n - s, 2);
    Ok((value, n >= 20 * s * (s + 1)))
}

/// One closed-form evaluator, selectable by id.
pub trait Formula: Send + Sync {
    fn id(&self) -> &'static str;
    fn eval(&self, p: &Params) -> Result<FormulaValue, FormulaError>;
}

macro_rules! formula_strategy {
    ($ty:ident, $id:literal, |$p:ident| $body:expr) => {
        struct $ty;
        impl Formula for $ty {
            fn id(&self) -> &'static str {
                $id
            }
            fn eval(&self, $p: &Params) -> Result<FormulaValue, FormulaError> {
                let (value, in_range) = $body;
                Ok(FormulaValue {
                    formula_id: $id.to_string(),
                    params: *$p,
                    value,
                    in_theorem_range: in_range,
                })
            }
        }
    };
}

formula_strategy!(TuranCount, "t", |p| {
    (t(p.need("t", "n")?, p.need("t", "l")?)?, Some(true))
});
formula_strategy!(AlonFranklGraphCount, "g", |p| {
    (
        g(p.need("g", "n")?, p.need("g", "l")?, p.need("g", "s")?)?,
        Some(true),
    )
});
formula_strategy!(AlonFrankl, "alon-frankl", |p| {
    let n = p.need("alon-frankl", "n")?;
    let l = p.need("alon-frankl", "l")?;
    let s = p.need("alon-frankl", "s")?;
    (alon_frankl_value(n, l, s)?, Some(true))
});
formula_strategy!(ErdosGallai, "erdos-gallai", |p| {
    (
        erdos_gallai_value(p.need("erdos-gallai", "n")?, p.need("erdos-gallai", "s")?),
        Some(true),
    )
});
formula_strategy!(GeneralizedTuranCount, "t-r", |p| {
    (
        t_r(
            p.need("t-r", "n")?,
            p.need("t-r", "l")?,
            p.need("t-r", "r")?,
        )?,
        Some(true),
    )
});
formula_strategy!(Mubayi, "mubayi", |p| {
    (
        mubayi_value(
            p.need("mubayi", "n")?,
            p.need("mubayi", "l")?,
            p.need("mubayi", "r")?,
        )?,
        Some(true),
    )
});
formula_strategy!(Frankl, "frankl", |p| {
    let (v, in_range) = frankl_value(
        p.need("frankl", "n")?,
        p.need("frankl", "r")?,
        p.need("frankl", "s")?,
    );
    (v, Some(in_range))
});
formula_strategy!(MainExtremalValue, "main", |p| {
    let n = p.need("main", "n")?;
    let l = p.need("main", "l")?;
    let s = p.need("main", "s")?;
    let r = p.need("main", "r")?;
    // hypothesis is "n sufficiently large": no finite threshold to check
    (main_value(n, l, s, r)?, None)
});
formula_strategy!(FanoExtremalValue, "fano", |p| {
    let (v, in_range) = fano_value(p.need("fano", "n")?, p.need("fano", "s")?)?;
    (v, Some(in_range))
});

/// Name-keyed registry of every formula evaluator.
pub struct FormulaRegistry {
    by_id: BTreeMap<&'static str, Box<dyn Formula>>,
}

impl Default for FormulaRegistry {
    fn default() -> Self {
        let mut by_id: BTreeMap<&'static str, Box<dyn Formula>> = BTreeMap::new();
        for f in [
            Box::new(TuranCount) as Box<dyn Formula>,
            Box::new(AlonFranklGraphCount),
            Box::new(AlonFrankl),
            Box::new(ErdosGallai),
            Box::new(GeneralizedTuranCount),
            Box::new(Mubayi),
            Box::new(Frankl),
            Box::new(MainExtremalValue),
            Box::new(FanoExtremalValue),
        ] {
            by_id.insert(f.id(), f);
        }
        FormulaRegistry { by_id }
    }
}

impl FormulaRegistry {
    pub fn get(&self, id: &str) -> Result<&dyn Formula, FormulaError> {
        self.by_id
            .get(id)
            .map(|b| b.as_ref())
            .ok_or_else(|| FormulaError::Unknown(id.to_string()))
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.by_id.keys().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn turan_counts() {
        assert_eq!(t(5, 2).unwrap(), u(6));
        assert_eq!(t(3, 3).unwrap(), u(3));
        assert_eq!(t(4, 2).unwrap(), u(4));
        assert_eq!(t(3, 1).unwrap(), u(0));
        assert!(t(3, 0).is_err());
    }

    #[test]
    fn g_counts() {
        assert_eq!(g(5, 2, 1).unwrap(), u(4));
        assert_eq!(g(6, 3, 2).unwrap(), u(9));
        assert_eq!(g(9, 4, 0).unwrap(), u(0));
        // one big part plus T(s,1): no internal edges on the small side
        assert_eq!(g(7, 2, 3).unwrap(), u(12));
    }

    #[test]
    fn alon_frankl_values() {
        assert_eq!(alon_frankl_value(5, 2, 1).unwrap(), u(4));
        assert_eq!(alon_frankl_value(7, 2, 3).unwrap(), u(12));
        // boundary n = 2s+1 is dominated by the clique term
        assert_eq!(alon_frankl_value(3, 2, 1).unwrap(), u(2));
        assert!(alon_frankl_value(2, 2, 1).is_err());
    }

    #[test]
    fn erdos_gallai_values() {
        assert_eq!(erdos_gallai_value(5, 1), u(4));
        assert_eq!(erdos_gallai_value(7, 3), u(21));
        assert_eq!(erdos_gallai_value(9, 0), u(0));
    }

    #[test]
    fn t_r_values() {
        assert_eq!(t_r(6, 3, 3).unwrap(), u(8));
        assert_eq!(t_r(7, 3, 3).unwrap(), u(12));
        assert!(t_r(6, 2, 3).is_err());
        for n in 0..=20 {
            for l in 2..=6 {
                assert_eq!(t_r(n, l, 2).unwrap(), t(n, l).unwrap());
            }
        }
    }

    #[test]
    fn mubayi_values() {
        assert_eq!(mubayi_value(6, 3, 3).unwrap(), u(8));
        assert_eq!(mubayi_value(5, 2, 2).unwrap(), u(6));
        assert_eq!(mubayi_value(2, 3, 3).unwrap(), u(0));
    }

    #[test]
    fn frankl_values() {
        let (v, in_range) = frankl_value(8, 3, 1);
        assert_eq!(v, u(21));
        assert!(in_range);
        let (v, in_range) = frankl_value(6, 3, 1);
        assert_eq!(v, u(10));
        assert!(!in_range);
        let (v, _) = frankl_value(9, 3, 0);
        assert_eq!(v, u(0));
    }

    #[test]
    fn main_values() {
        assert_eq!(main_value(7, 3, 1, 3).unwrap(), u(9));
        assert_eq!(main_value(12, 3, 2, 3).unwrap(), u(50));
        assert_eq!(main_value(8, 4, 1, 4).unwrap(), u(12));
        assert!(main_value(7, 3, 0, 3).is_err());
        assert!(main_value(7, 2, 1, 3).is_err());
    }

    #[test]
    fn fano_values() {
        let (v, in_range) = fano_value(10, 2).unwrap();
        assert_eq!(v, u(64));
        assert!(!in_range);
        let (v, in_range) = fano_value(41, 1).unwrap();
        assert_eq!(v, u(780));
        assert!(in_range);
        let (v, _) = fano_value(9, 0).unwrap();
        assert_eq!(v, u(0));
        assert!(fano_value(2, 2).is_err());
    }

    #[test]
    fn binomial_against_pascal() {
        for n in 0..=12u64 {
            for k in 0..=n {
                let pascal = if k == 0 || k == n {
                    u(1)
                } else {
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                };
                assert_eq!(binomial(n, k), pascal);
            }
        }
        assert_eq!(binomial(3, 5), u(0));
    }

    #[test]
    fn registry_dispatch() {
        let reg = FormulaRegistry::default();
        let p = Params {
            n: Some(10),
            l: None,
            s: Some(2),
            r: None,
        };
        let out = reg.get("fano").unwrap().eval(&p).unwrap();
        assert_eq!(out.value, u(64));
        assert_eq!(out.in_theorem_range, Some(false));
        assert!(reg.get("nope").is_err());
        assert!(matches!(
            reg.get("t").unwrap().eval(&Params::default()),
            Err(FormulaError::MissingParam {
                id: "t",
                param: "n"
            })
        ));
        assert_eq!(reg.ids().count(), 9);
    }
}
