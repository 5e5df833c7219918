//! Exact rational arithmetic helpers: negative continued fractions and
//! modular inverses.
//!
//! A rational `r ∈ (0, 1)` has a unique *negative* (Hirzebruch–Jung)
//! continued fraction expansion
//!
//! ```text
//! -1/r = m1 - 1/(m2 - 1/(m3 - ...))      with all mi <= -2.
//! ```
//!
//! The `mi` are exactly the framings of the plumbing chain that a Seifert
//! multiplier `r` contributes, so chains of integers `<= -2` get their own
//! little type here and everything downstream builds on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals. Panics on a zero denominator,
/// like `BigRational::new` itself.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A nonempty sequence of integers `<= -2`: the framings of one plumbing leg,
/// ordered from the vertex adjacent to the central node outward.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramingChain {
    framings: Vec<i64>,
}

impl FramingChain {
    pub fn new(framings: Vec<i64>) -> Result<Self> {
        if framings.is_empty() {
            return Err(Error::Domain("framing chain must be nonempty".into()));
        }
        if let Some(&bad) = framings.iter().find(|&&m| m > -2) {
            return Err(Error::Domain(format!(
                "framing chain entries must be <= -2, got {bad}"
            )));
        }
        Ok(FramingChain { framings })
    }

    /// The chain `[-2, -2, ..., -2]` of the given length; expands `(n-1)/n`.
    pub fn all_twos(len: usize) -> Result<Self> {
        FramingChain::new(vec![-2; len])
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn len(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        false // chains are nonempty by construction
    }
}

/// Expands `r ∈ (0, 1)` into its negative continued fraction.
///
/// With `r = p/q` in lowest terms the recurrence is `m = -ceil(q/p)`,
/// `(p, q) <- (p*(-m) - q, p)`, stopping when the remainder hits zero. Each
/// step strictly decreases `p`, so this terminates, and every emitted entry
/// is `<= -2`.
pub fn neg_continued_fraction(r: &Rational) -> Result<FramingChain> {
    if !(r > &Rational::zero() && r < &Rational::one()) {
        return Err(Error::Domain(format!(
            "negative continued fractions are defined for rationals strictly between 0 and 1, got {r}"
        )));
    }
    let mut p = r.numer().clone();
    let mut q = r.denom().clone();
    let mut chain = Vec::new();
    loop {
        let m = -q.div_ceil(&p);
        let entry = i64::try_from(&m)
            .map_err(|_| Error::Domain(format!("continued fraction entry {m} overflows i64")))?;
        chain.push(entry);
        let s = -&m * &p - &q;
        if s.is_zero() {
            return FramingChain::new(chain);
        }
        q = std::mem::replace(&mut p, s);
    }
}

/// Evaluates a framing chain back to the rational `r ∈ (0, 1)` it expands.
///
/// This is the inverse of [`neg_continued_fraction`]: the nested value
/// `m1 - 1/(m2 - ...)` stays strictly below `-1` because all entries are
/// `<= -2`, and the function returns `-1` over it.
pub fn cf_evaluate(chain: &FramingChain) -> Rational {
    let mut nested: Option<Rational> = None;
    for &m in chain.framings().iter().rev() {
        let m = Rational::from(BigInt::from(m));
        nested = Some(match nested {
            None => m,
            Some(x) => m - x.recip(),
        });
    }
    // Chains are nonempty, so `nested` is set, and it is < -1, so nonzero.
    -nested.expect("framing chains are nonempty").recip()
}

/// Least non-negative solution `x ∈ [0, modulus)` of
/// `coeff * x ≡ rhs (mod modulus)`.
///
/// Errors when `modulus < 2` or when `gcd(coeff, modulus)` does not divide
/// `rhs` (no solution exists). When solutions exist they form a residue
/// class modulo `modulus / gcd`, and the representative in
/// `[0, modulus/gcd)` is returned.
pub fn solve_congruence(coeff: &BigInt, rhs: &BigInt, modulus: &BigInt) -> Result<BigInt> {
    if modulus < &BigInt::from(2) {
        return Err(Error::Domain(format!(
            "congruence modulus must be at least 2, got {modulus}"
        )));
    }
    let ext = coeff.extended_gcd(modulus);
    // extended_gcd can return a negative gcd for negative inputs; normalize.
    let g = ext.gcd.abs();
    let sign = if ext.gcd.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let (quot, rem) = rhs.div_rem(&g);
    if !rem.is_zero() {
        return Err(Error::Domain(format!(
            "congruence {coeff}*x = {rhs} (mod {modulus}) has no solution: gcd {g} does not divide {rhs}"
        )));
    }
    let step = modulus / &g;
    Ok((sign * ext.x * quot).mod_floor(&step))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(framings: &[i64]) -> FramingChain {
        FramingChain::new(framings.to_vec()).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            neg_continued_fraction(&ratio(7, 11)).unwrap(),
            chain(&[-2, -3, -2, -2])
        );
        assert_eq!(neg_continued_fraction(&ratio(1, 2)).unwrap(), chain(&[-2]));
        assert_eq!(
            neg_continued_fraction(&ratio(2, 3)).unwrap(),
            chain(&[-2, -2])
        );
    }

    #[test]
    fn expansion_of_n_minus_one_over_n_is_all_twos() {
        for n in 2..=100i64 {
            assert_eq!(
                neg_continued_fraction(&ratio(n - 1, n)).unwrap(),
                FramingChain::all_twos((n - 1) as usize).unwrap(),
                "(n-1)/n for n={n}"
            );
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(cf_evaluate(&chain(&[-2])), ratio(1, 2));
        assert_eq!(cf_evaluate(&chain(&[-3])), ratio(1, 3));
        assert_eq!(cf_evaluate(&chain(&[-2; 6])), ratio(6, 7));
        assert_eq!(cf_evaluate(&chain(&[-2, -3, -2, -2])), ratio(7, 11));
    }

    #[test]
    fn round_trip_over_small_denominators() {
        for q in 2..=200i64 {
            for p in 1..q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let r = ratio(p, q);
                let c = neg_continued_fraction(&r).unwrap();
                assert_eq!(cf_evaluate(&c), r, "round trip failed at {p}/{q}");
            }
        }
    }

    #[test]
    fn rejects_out_of_range_input() {
        for bad in [ratio(0, 1), ratio(1, 1), ratio(3, 2), ratio(-1, 2)] {
            assert!(matches!(
                neg_continued_fraction(&bad),
                Err(Error::Domain(_))
            ));
        }
    }

    #[test]
    fn chain_validation() {
        assert!(FramingChain::new(vec![]).is_err());
        assert!(FramingChain::new(vec![-2, -1]).is_err());
        assert!(FramingChain::new(vec![-2, 0]).is_err());
        assert!(FramingChain::new(vec![-5, -2, -17]).is_ok());
    }

    #[test]
    fn congruence_examples() {
        let solve = |c: i64, r: i64, m: i64| {
            solve_congruence(&BigInt::from(c), &BigInt::from(r), &BigInt::from(m))
        };
        assert_eq!(solve(3, 2, 5).unwrap(), BigInt::from(4));
        assert_eq!(solve(1, 0, 7).unwrap(), BigInt::from(0));
        assert_eq!(solve(15, -1, 2).unwrap(), BigInt::from(1));
        // gcd(4, 6) = 2 divides 2: solutions are 2 and 5 mod 6, least is 2.
        assert_eq!(solve(4, 2, 6).unwrap(), BigInt::from(2));
        // gcd(2, 4) = 2 does not divide 1.
        assert!(matches!(solve(2, 1, 4), Err(Error::Domain(_))));
        assert!(matches!(solve(3, 1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn congruence_returns_least_nonnegative() {
        for m in 2..=40i64 {
            for c in -40..=40i64 {
                for r in -10..=10i64 {
                    if let Ok(x) = solve_congruence(
                        &BigInt::from(c),
                        &BigInt::from(r),
                        &BigInt::from(m),
                    ) {
                        assert!(x >= BigInt::from(0) && x < BigInt::from(m));
                        assert!(((BigInt::from(c) * &x - BigInt::from(r)) % BigInt::from(m))
                            .is_zero());
                        // least: x - gcd-step must leave the range
                        let g = num_integer::gcd(c, m).abs().max(1);
                        assert!(&x - BigInt::from(m / g) < BigInt::from(0));
                    }
                }
            }
        }
    }
}
