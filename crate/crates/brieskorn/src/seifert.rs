//! Brieskorn spheres and Seifert invariants.
//!
//! A Brieskorn sphere `Sigma(a1,...,an)` (pairwise coprime exponents
//! `ai >= 2`, `n >= 3`) is the link of the singularity
//! `x1^a1 + ... + xn^an = 0`. With the orientation as such a link it is the
//! Seifert fibered space `M(e0; r1,...,rn)` whose multipliers
//! `ri = bi/ai ∈ (0,1)` are fixed by the congruences
//!
//! ```text
//! (A/ai) * bi ≡ -1  (mod ai),        A = a1*...*an,
//! ```
//!
//! and whose integer Euler number `e0` is pinned by the requirement that the
//! total Euler number `e = e0 + r1 + ... + rn` equals `-1/A`. In particular
//! `e < 0`, which makes the canonical plumbing description negative definite.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{solve_congruence, Rational};
use crate::plumbing;

/// Exponents of a Brieskorn sphere, stored sorted ascending.
///
/// Input order is irrelevant to the manifold, so construction normalizes it;
/// display and downstream leg ordering always use the sorted form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrieskornIndex {
    exponents: Vec<u64>,
}

impl BrieskornIndex {
    pub fn new(exponents: &[u64]) -> Result<Self> {
        if exponents.len() < 3 {
            return Err(Error::Domain(format!(
                "a Brieskorn sphere needs at least 3 exponents, got {}",
                exponents.len()
            )));
        }
        if let Some(&bad) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::Domain(format!(
                "Brieskorn exponents must be at least 2, got {bad}"
            )));
        }
        let mut exponents = exponents.to_vec();
        exponents.sort_unstable();
        for i in 0..exponents.len() {
            for j in i + 1..exponents.len() {
                if exponents[i].gcd(&exponents[j]) != 1 {
                    return Err(Error::Domain(format!(
                        "Brieskorn exponents must be pairwise coprime, got {} and {}",
                        exponents[i], exponents[j]
                    )));
                }
            }
        }
        Ok(BrieskornIndex { exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least 3 exponents by construction
    }

    /// The product `A = a1*...*an`.
    pub fn product(&self) -> BigInt {
        self.exponents
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * BigInt::from(a))
    }
}

impl fmt::Display for BrieskornIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sigma(")?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for BrieskornIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("Sigma(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Parse(format!("expected Sigma(a1,...,an), got {s:?}"))
            })?;
        let exponents = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad exponent {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BrieskornIndex::new(&exponents)
    }
}

/// Seifert invariants `M(e0; r1,...,rn)` of an oriented Seifert fibered
/// space over `S^2`, with every multiplier normalized to `ri ∈ (0, 1)`.
///
/// `n = 0` is allowed (circle bundles); the multiplier list order carries no
/// meaning, and [`SeifertData::is_same_space`] compares up to reordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    e0: i64,
    multipliers: Vec<Rational>,
}

impl SeifertData {
    pub fn new(e0: i64, multipliers: Vec<Rational>) -> Result<Self> {
        for r in &multipliers {
            if !(r > &Rational::zero() && r < &Rational::one()) {
                return Err(Error::Domain(format!(
                    "Seifert multipliers must lie strictly between 0 and 1, got {r}"
                )));
            }
        }
        Ok(SeifertData { e0, multipliers })
    }

    /// The Seifert invariants of a Brieskorn sphere, oriented as a link of
    /// singularity.
    ///
    /// Solves `(A/ai)*bi ≡ -1 (mod ai)` for each multiplier numerator and
    /// recovers `e0` from `e0 + Σ ri = -1/A`. The right-hand side forces the
    /// candidate `e0` to be an integer; a non-integer value here would mean
    /// the congruence solving is broken, so it is reported as an internal
    /// error rather than a domain error.
    pub fn from_brieskorn(index: &BrieskornIndex) -> Result<SeifertData> {
        let a_product = index.product();
        let mut multipliers = Vec::with_capacity(index.len());
        for &a in index.exponents() {
            let a = BigInt::from(a);
            let coeff = &a_product / &a;
            let beta = solve_congruence(&coeff, &(-BigInt::one()), &a)?;
            multipliers.push(Rational::new(beta, a));
        }
        let sum: Rational = multipliers.iter().sum();
        let e0_rat = -Rational::new(BigInt::one(), a_product) - sum;
        if !e0_rat.is_integer() {
            return Err(Error::Internal(format!(
                "central Euler number came out non-integral ({e0_rat}) for {index}"
            )));
        }
        let e0 = i64::try_from(e0_rat.numer())
            .map_err(|_| Error::Internal(format!("central Euler number {e0_rat} overflows i64")))?;
        SeifertData::new(e0, multipliers)
    }

    pub fn e0(&self) -> i64 {
        self.e0
    }

    pub fn multipliers(&self) -> &[Rational] {
        &self.multipliers
    }

    /// The (total, rational) Euler number `e = e0 + Σ ri`.
    pub fn euler_number(&self) -> Rational {
        self.multipliers
            .iter()
            .fold(Rational::from(BigInt::from(self.e0)), |acc, r| acc + r)
    }

    /// Seifert invariants of the same space with reversed orientation:
    /// `-M(e0; r1,...,rn) = M(-n-e0; 1-r1,...,1-rn)`.
    ///
    /// Reversal negates the Euler number, and applying it twice is the
    /// identity.
    pub fn reverse_orientation(&self) -> SeifertData {
        let n = self.multipliers.len() as i64;
        SeifertData {
            e0: -n - self.e0,
            multipliers: self
                .multipliers
                .iter()
                .map(|r| Rational::one() - r)
                .collect(),
        }
    }

    /// Order of the first homology group: `|e| * q1*...*qn` where `qi` are
    /// the multiplier denominators, or `0` when `e = 0` (infinite homology).
    ///
    /// As a cross-check this also computes `|det Q|` of the standard
    /// plumbing graph — an independent route to the same number — and
    /// insists the two agree.
    pub fn h1_order(&self) -> BigInt {
        let denom_product = self
            .multipliers
            .iter()
            .fold(BigInt::one(), |acc, r| acc * r.denom());
        let order = (self.euler_number() * denom_product).numer().abs();
        let det = plumbing::standard_graph(self)
            .expect("standard graph exists for every valid Seifert datum")
            .determinant();
        assert_eq!(
            order,
            det.abs(),
            "homology order disagrees with |det Q| for {self}"
        );
        order
    }

    /// Whether two Seifert data describe the same space: equal central Euler
    /// numbers and equal multiplier multisets.
    pub fn is_same_space(&self, other: &SeifertData) -> bool {
        if self.e0 != other.e0 || self.multipliers.len() != other.multipliers.len() {
            return false;
        }
        let mut left = self.multipliers.clone();
        let mut right = other.multipliers.clone();
        left.sort();
        right.sort();
        left == right
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({};", self.e0)?;
        for (i, r) in self.multipliers.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {r}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for SeifertData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("M(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected M(e0; r1, ..., rn), got {s:?}")))?;
        let (e0_part, rest) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in Seifert datum {s:?}")))?;
        let e0 = e0_part
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad central Euler number {e0_part:?}: {e}")))?;
        let mut multipliers = Vec::new();
        if !rest.trim().is_empty() {
            for part in rest.split(',') {
                let part = part.trim();
                let (p, q) = part.split_once('/').ok_or_else(|| {
                    Error::Parse(format!("multiplier {part:?} is not of the form p/q"))
                })?;
                let p = p
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad numerator {p:?}: {e}")))?;
                let q = q
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad denominator {q:?}: {e}")))?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {part:?}")));
                }
                multipliers.push(Rational::new(p, q));
            }
        }
        SeifertData::new(e0, multipliers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn index(exponents: &[u64]) -> BrieskornIndex {
        BrieskornIndex::new(exponents).unwrap()
    }

    #[test]
    fn index_validation_and_normalization() {
        assert_eq!(index(&[5, 3, 2]).exponents(), &[2, 3, 5]);
        assert!(BrieskornIndex::new(&[2, 3]).is_err());
        assert!(BrieskornIndex::new(&[2, 3, 1]).is_err());
        assert!(BrieskornIndex::new(&[2, 3, 9]).is_err());
        assert!(BrieskornIndex::new(&[2, 3, 5, 7, 11]).is_ok());
    }

    #[test]
    fn index_display_parse_round_trip() {
        let idx = index(&[2, 3, 5]);
        assert_eq!(idx.to_string(), "Sigma(2,3,5)");
        assert_eq!("Sigma(2,3,5)".parse::<BrieskornIndex>().unwrap(), idx);
        assert_eq!("Sigma(5, 2, 3)".parse::<BrieskornIndex>().unwrap(), idx);
        assert!("Sigma(2,3)".parse::<BrieskornIndex>().is_err());
        assert!("Poincare".parse::<BrieskornIndex>().is_err());
    }

    #[test]
    fn poincare_sphere_invariants() {
        let m = SeifertData::from_brieskorn(&index(&[2, 3, 5])).unwrap();
        assert_eq!(m.e0(), -2);
        assert_eq!(m.multipliers(), &[ratio(1, 2), ratio(2, 3), ratio(4, 5)]);
        assert_eq!(m.euler_number(), ratio(-1, 30));
        assert_eq!(m.h1_order(), BigInt::from(1));
    }

    #[test]
    fn small_brieskorn_table() {
        // (exponents, e0, multipliers)
        let cases: &[(&[u64], i64, &[(i64, i64)])] = &[
            (&[2, 3, 7], -1, &[(1, 2), (1, 3), (1, 7)]),
            (&[2, 3, 11], -2, &[(1, 2), (2, 3), (9, 11)]),
            (&[2, 3, 13], -1, &[(1, 2), (1, 3), (2, 13)]),
            (&[2, 5, 7], -1, &[(1, 2), (1, 5), (2, 7)]),
            (&[3, 4, 5], -1, &[(1, 3), (1, 4), (2, 5)]),
            (&[2, 7, 11], -2, &[(1, 2), (6, 7), (7, 11)]),
            (&[3, 4, 11], -2, &[(1, 3), (3, 4), (10, 11)]),
            (&[3, 5, 7], -2, &[(1, 3), (4, 5), (6, 7)]),
            (&[2, 5, 9], -2, &[(1, 2), (3, 5), (8, 9)]),
            (&[3, 7, 10], -2, &[(2, 3), (3, 7), (9, 10)]),
            (&[3, 7, 19], -2, &[(2, 3), (6, 7), (9, 19)]),
            (&[3, 8, 11], -2, &[(2, 3), (7, 8), (5, 11)]),
            (&[4, 5, 9], -2, &[(3, 4), (4, 5), (4, 9)]),
            (&[3, 5, 14], -2, &[(2, 3), (2, 5), (13, 14)]),
            (&[2, 3, 7, 41], -3, &[(1, 2), (2, 3), (6, 7), (40, 41)]),
            (&[2, 3, 11, 13], -3, &[(1, 2), (2, 3), (10, 11), (12, 13)]),
        ];
        for (exps, e0, mult) in cases {
            let m = SeifertData::from_brieskorn(&index(exps)).unwrap();
            assert_eq!(m.e0(), *e0, "e0 of {exps:?}");
            let expected: Vec<_> = mult.iter().map(|&(p, q)| ratio(p, q)).collect();
            assert_eq!(m.multipliers(), &expected[..], "multipliers of {exps:?}");
            // Links of singularities are integer homology spheres.
            assert_eq!(m.h1_order(), BigInt::from(1), "h1 of {exps:?}");
            // The defining normalization: e = -1/A.
            let a: i64 = exps.iter().map(|&x| x as i64).product();
            assert_eq!(m.euler_number(), ratio(-1, a), "euler number of {exps:?}");
        }
    }

    #[test]
    fn orientation_reversal() {
        let m = SeifertData::new(-2, vec![ratio(1, 3), ratio(1, 3)]).unwrap();
        let rev = m.reverse_orientation();
        assert_eq!(rev.e0(), 0);
        assert_eq!(rev.multipliers(), &[ratio(2, 3), ratio(2, 3)]);
        assert_eq!(rev.euler_number(), -m.euler_number());
        assert!(rev.reverse_orientation().is_same_space(&m));
    }

    #[test]
    fn h1_examples() {
        let m = SeifertData::new(-2, vec![ratio(1, 3), ratio(1, 3)]).unwrap();
        assert_eq!(m.h1_order(), BigInt::from(12));
        // e = 0: infinite first homology, reported as order 0.
        let torus_like = SeifertData::new(-1, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(torus_like.euler_number(), ratio(0, 1));
        assert_eq!(torus_like.h1_order(), BigInt::from(0));
        // No exceptional fibers at all: lens-space-like circle bundle.
        let bundle = SeifertData::new(-1, vec![]).unwrap();
        assert_eq!(bundle.euler_number(), ratio(-1, 1));
        assert_eq!(bundle.h1_order(), BigInt::from(1));
    }

    #[test]
    fn same_space_ignores_multiplier_order() {
        let a = SeifertData::new(-2, vec![ratio(1, 2), ratio(6, 7), ratio(7, 11)]).unwrap();
        let b = SeifertData::new(-2, vec![ratio(1, 2), ratio(7, 11), ratio(6, 7)]).unwrap();
        let c = SeifertData::new(-1, vec![ratio(1, 2), ratio(7, 11), ratio(6, 7)]).unwrap();
        assert!(a.is_same_space(&b));
        assert!(!a.is_same_space(&c));
    }

    #[test]
    fn seifert_display_parse_round_trip() {
        let m = SeifertData::from_brieskorn(&index(&[2, 3, 5])).unwrap();
        assert_eq!(m.to_string(), "M(-2; 1/2, 2/3, 4/5)");
        assert_eq!("M(-2; 1/2, 2/3, 4/5)".parse::<SeifertData>().unwrap(), m);
        let empty = SeifertData::new(-1, vec![]).unwrap();
        assert_eq!(empty.to_string(), "M(-1;)");
        assert_eq!("M(-1;)".parse::<SeifertData>().unwrap(), empty);
        assert!("M(-2: 1/2)".parse::<SeifertData>().is_err());
        assert!("M(-2; 3/2)".parse::<SeifertData>().is_err());
    }
}
