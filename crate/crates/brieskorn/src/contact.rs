//! Tight fillable contact structures on negative-definite plumbed
//! 3-manifolds and the `d3` invariant of the distinguished one.
//!
//! On a star-shaped plumbing whose framings are all `<= -2`, the tight
//! contact structures with symplectic (Stein) fillings are classified by
//! rotation-number choices along the legs, giving the product count
//!
//! ```text
//! count = |e0 + 1| * Π_legs Π_j |m_j + 1|.
//! ```
//!
//! When the count is exactly `2` — equivalently, a single `-3`-framed vertex
//! and `-2` everywhere else — the two structures are interchanged by
//! conjugation and share their `d3` invariant, computed here from a
//! characteristic (co)vector `v` supported on the `-3` vertex:
//!
//! ```text
//! d3 = (v^T Q^{-1} v + |vertices|) / 4.
//! ```
//!
//! Two infinite families have closed forms for this quantity, worked out by
//! eliminating the continued-fraction data by hand; they are kept alongside
//! the matrix route so each can check the other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{FramingChain, Rational};
use crate::plumbing::PlumbingGraph;

/// An integer vector indexed by the vertices of a plumbing graph, intended
/// to satisfy the characteristic condition `k(v) ≡ framing(v) (mod 2)`.
/// The condition depends on the graph, so it is checked at the point of use
/// (see [`validate_characteristic`]) rather than at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharVector {
    values: Vec<i64>,
}

impl CharVector {
    pub fn new(values: Vec<i64>) -> CharVector {
        CharVector { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn negated(&self) -> CharVector {
        CharVector {
            values: self.values.iter().map(|&x| -x).collect(),
        }
    }
}

impl std::fmt::Display for CharVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Checks that `k` has one entry per vertex and the right parity everywhere.
pub fn validate_characteristic(graph: &PlumbingGraph, k: &CharVector) -> Result<()> {
    if k.len() != graph.vertex_count() {
        return Err(Error::Domain(format!(
            "vector has {} entries but the graph has {} vertices",
            k.len(),
            graph.vertex_count()
        )));
    }
    for (v, &value) in k.values().iter().enumerate() {
        let framing = graph.framing(v);
        if (value - framing) % 2 != 0 {
            return Err(Error::Parity {
                vertex: v,
                value,
                framing,
            });
        }
    }
    Ok(())
}

/// Number of tight fillable contact structures on the boundary of the
/// plumbing: `|e0 + 1| * Π |m_j + 1|` over all leg vertices.
///
/// The formula requires every framing, central included, to be `<= -2`;
/// a central framing of `-1` admits blow-downs, the count formula does not
/// apply, and that case is classified separately in the literature, so it is
/// reported as [`Error::NotApplicable`].
pub fn fillable_count(graph: &PlumbingGraph) -> Result<BigInt> {
    let e0 = graph.center_framing();
    if e0 >= -1 {
        return Err(Error::NotApplicable(format!(
            "central framing {e0} is not <= -2; the product count formula only applies below -1 \
             (the -1 case admits blow-downs and is classified separately)"
        )));
    }
    // Legs are <= -2 by construction, so the product runs over everything.
    Ok(graph
        .framings()
        .iter()
        .fold(BigInt::one(), |acc, &m| acc * BigInt::from((m + 1).abs())))
}

/// The characteristic vector representing the two conjugate fillable
/// structures when [`fillable_count`] is exactly 2: `-1` on the unique
/// `-3`-framed vertex and `0` elsewhere.
///
/// Exactly-two counts happen precisely when one vertex is framed `-3` and
/// the rest `-2`; any other shape is rejected as not applicable.
pub fn canonical_vector(graph: &PlumbingGraph) -> Result<CharVector> {
    let mut minus_three = None;
    for (v, &m) in graph.framings().iter().enumerate() {
        match m {
            -2 => {}
            -3 => {
                if minus_three.is_some() {
                    return Err(Error::NotApplicable(
                        "more than one -3-framed vertex: the two-structure pattern needs exactly one"
                            .into(),
                    ));
                }
                minus_three = Some(v);
            }
            other => {
                return Err(Error::NotApplicable(format!(
                    "vertex framed {other}: the two-structure pattern allows only -2 and a single -3"
                )));
            }
        }
    }
    let v = minus_three.ok_or_else(|| {
        Error::NotApplicable(
            "no -3-framed vertex: the two-structure pattern needs exactly one".into(),
        )
    })?;
    let mut values = vec![0; graph.vertex_count()];
    values[v] = -1;
    Ok(CharVector::new(values))
}

/// The `d3` invariant `(v^T Q^{-1} v + |vertices|) / 4` of the contact
/// structure represented by the characteristic vector `v`.
///
/// `v` and `-v` represent conjugate structures and give the same value.
/// Vectors supported on a single vertex take an `O(n)` shortcut through two
/// tree determinants; anything else goes through the cached exact inverse.
pub fn d3(graph: &PlumbingGraph, v: &CharVector) -> Result<Rational> {
    validate_characteristic(graph, v)?;
    let n = graph.vertex_count();
    let quad = match single_support(v) {
        Some((w, x)) => {
            let diag = graph.inverse_diagonal_entry(w)?;
            diag * Rational::from(BigInt::from(x * x))
        }
        None => {
            let data = graph.inverse_data()?;
            let mut acc = BigInt::zero();
            for (i, &vi) in v.values().iter().enumerate() {
                if vi == 0 {
                    continue;
                }
                for (j, &vj) in v.values().iter().enumerate() {
                    if vj == 0 {
                        continue;
                    }
                    acc += &data.adjugate[i][j] * BigInt::from(vi) * BigInt::from(vj);
                }
            }
            Rational::new(acc, data.det.clone())
        }
    };
    Ok((quad + Rational::from(BigInt::from(n as i64))) / Rational::from(BigInt::from(4)))
}

fn single_support(v: &CharVector) -> Option<(usize, i64)> {
    let mut found = None;
    for (i, &x) in v.values().iter().enumerate() {
        if x != 0 {
            if found.is_some() {
                return None;
            }
            found = Some((i, x));
        }
    }
    found
}

/// Closed form for `d3` of the distinguished structure on the boundary of
/// the pattern graph of [`quadruple_graph`]:
///
/// ```text
/// d3 = (-abcd + a + b + c + d - 3) / 4.
/// ```
///
/// This equals the matrix route exactly when the four exponents satisfy the
/// unit condition `1/a + 1/b + 1/c + 1/d = 1 + 1/(abcd)` (equivalently, the
/// pattern graph is negative definite with determinant of absolute value 1).
pub fn d3_quadruple_closed(a: u64, b: u64, c: u64, d: u64) -> Rational {
    let product: BigInt = [a, b, c, d]
        .iter()
        .fold(BigInt::one(), |acc, &x| acc * BigInt::from(x));
    let sum: BigInt = [a, b, c, d].iter().map(|&x| BigInt::from(x)).sum();
    Rational::new(-product + sum - BigInt::from(3), BigInt::from(4))
}

/// The star with central framing `-3` and one all-`(-2)` leg of length
/// `x - 1` per exponent: the two-fillable pattern whose legs expand
/// `(x-1)/x`. For exponents satisfying the unit condition this is exactly
/// the standard plumbing of the Brieskorn sphere.
pub fn quadruple_graph(a: u64, b: u64, c: u64, d: u64) -> Result<PlumbingGraph> {
    let legs = [a, b, c, d]
        .iter()
        .map(|&x| {
            if x < 2 {
                return Err(Error::Domain(format!("exponent {x} must be at least 2")));
            }
            FramingChain::all_twos((x - 1) as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlumbingGraph::star(-3, legs))
}

/// The star with central framing `-2` and legs
/// `[(-2)^s, -3, (-2)^t]`, `[(-2)^(a-1)]`, `[(-2)^(b-1)]` — the two-fillable
/// pattern with the `-3` on a leg. Requires `a, b >= 2`.
pub fn e0_minus_two_graph(s: u64, t: u64, a: u64, b: u64) -> Result<PlumbingGraph> {
    if a < 2 || b < 2 {
        return Err(Error::Domain(format!(
            "leg exponents must be at least 2, got a={a}, b={b}"
        )));
    }
    let mut first = vec![-2i64; s as usize];
    first.push(-3);
    first.extend(std::iter::repeat(-2).take(t as usize));
    let legs = vec![
        FramingChain::new(first)?,
        FramingChain::all_twos((a - 1) as usize)?,
        FramingChain::all_twos((b - 1) as usize)?,
    ];
    Ok(PlumbingGraph::star(-2, legs))
}

/// Closed form for `d3` of the distinguished structure on the boundary of
/// [`e0_minus_two_graph`]`(s, t, a, b)`:
///
/// ```text
/// d3 = (s + t + a + b - (t+1) * [ab - (s+1)(ab - a - b)]) / 4.
/// ```
///
/// Agrees with the matrix route whenever the graph is negative definite
/// with determinant of absolute value 1; see [`h1_e0m2_closed`] for the
/// determinant itself.
pub fn d3_e0m2_closed(s: u64, t: u64, a: u64, b: u64) -> Rational {
    let (s, t, a, b) = (
        BigInt::from(s),
        BigInt::from(t),
        BigInt::from(a),
        BigInt::from(b),
    );
    let ab = &a * &b;
    let x = &ab - &a - &b;
    let bracket = &ab - (&s + BigInt::one()) * &x;
    let numer = &s + &t + &a + &b - (&t + BigInt::one()) * bracket;
    Rational::new(numer, BigInt::from(4))
}

/// Order of the first homology of the boundary of
/// [`e0_minus_two_graph`]`(s, t, a, b)` — up to sign the determinant of its
/// intersection form:
///
/// ```text
/// h1 = (t+2) ab - [(s+2)(t+2) - 1] (ab - a - b).
/// ```
///
/// The value is positive exactly when the graph is negative definite, zero
/// exactly when the form is singular, and its absolute value always equals
/// `|det Q|`.
pub fn h1_e0m2_closed(s: u64, t: u64, a: u64, b: u64) -> BigInt {
    let (s, t, a, b) = (
        BigInt::from(s),
        BigInt::from(t),
        BigInt::from(a),
        BigInt::from(b),
    );
    let ab = &a * &b;
    let x = &ab - &a - &b;
    (&t + BigInt::from(2)) * &ab
        - ((&s + BigInt::from(2)) * (&t + BigInt::from(2)) - BigInt::one()) * &x
}
