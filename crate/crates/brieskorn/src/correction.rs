//! Heegaard Floer correction terms of negative-definite plumbed homology
//! spheres via the Ozsváth–Szabó full-path algorithm.
//!
//! Characteristic vectors `K` on the plumbing (one integer per vertex,
//! `K(v) ≡ m(v) mod 2`) are walked by repeatedly reflecting at a vertex
//! where `K(v) = -m(v)`:
//!
//! ```text
//! K  ->  K + 2 * Q[v]      (the v-th row of the intersection form)
//! ```
//!
//! Starting from vectors in the *initial* window `m(v)+2 <= K(v) <= -m(v)`,
//! a path either leaves all windows (it *fails*) or lands with every
//! coordinate in the *terminal* window `m(v) <= K(v) <= -m(v)-2` (it *ends
//! correctly*). Reflections preserve the Maslov grading
//!
//! ```text
//! M(K) = (K^T Q^{-1} K + |vertices|) / 4,
//! ```
//!
//! and the correction term `d` is the largest grading among initial vectors
//! whose path ends correctly. The exhaustive search enumerates the window
//! lattice in mixed-radix Gray-code order so the quadratic form updates in
//! `O(n)` per vector, takes a histogram of gradings, and then walks
//! candidates level by level from the top — the first success at the highest
//! populated level is `d`. When the window lattice exceeds the caller's
//! budget, a short list of hand-shaped witness vectors is walked instead,
//! certifying a lower bound that equals `d` whenever one of them realizes
//! the maximum.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::contact::{validate_characteristic, CharVector};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::plumbing::{InverseData, PlumbingGraph};

/// Default cap on the number of initial vectors an exhaustive search may
/// enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathStatus {
    EndsCorrectly,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathOutcome {
    pub status: PathStatus,
    /// Number of reflections performed.
    pub steps: u64,
    pub final_vector: CharVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVector {
    pub vector: CharVector,
    pub grading: Rational,
}

/// Result of a correction-term computation, tagged by how it was certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorrectionTerm {
    /// Every initial vector was graded; `d` is exact.
    Exhaustive { d: Rational, examined: u128 },
    /// The search space exceeded the budget; `d` is the largest grading of a
    /// verified correctly-ending witness, hence a certified lower bound.
    WitnessBound {
        d: Rational,
        witness: CharVector,
        search_space: u128,
    },
}

impl CorrectionTerm {
    pub fn value(&self) -> &Rational {
        match self {
            CorrectionTerm::Exhaustive { d, .. } => d,
            CorrectionTerm::WitnessBound { d, .. } => d,
        }
    }

    pub fn certification(&self) -> &'static str {
        match self {
            CorrectionTerm::Exhaustive { .. } => "exhaustive",
            CorrectionTerm::WitnessBound { .. } => "witness-verified",
        }
    }
}

/// Whether every coordinate lies in the initial window
/// `m(v)+2 <= K(v) <= -m(v)`. Length mismatches are simply not initial.
/// The characteristic parity is a separate concern, checked by the entry
/// points that walk or grade vectors.
pub fn is_initial(graph: &PlumbingGraph, k: &CharVector) -> bool {
    k.len() == graph.vertex_count()
        && k.values().iter().enumerate().all(|(v, &x)| {
            let m = graph.framing(v);
            m + 2 <= x && x <= -m
        })
}

/// Whether every coordinate lies in the terminal window
/// `m(v) <= K(v) <= -m(v)-2`.
pub fn is_terminal(graph: &PlumbingGraph, k: &CharVector) -> bool {
    k.len() == graph.vertex_count()
        && k.values().iter().enumerate().all(|(v, &x)| {
            let m = graph.framing(v);
            m <= x && x <= -m - 2
        })
}

/// Number of initial vectors: the product of the window sizes `|m(v)|`,
/// saturating at `u128::MAX`. Vertices with framing `>= 0` have an empty
/// window, making the count zero.
pub fn initial_vector_count(graph: &PlumbingGraph) -> u128 {
    graph.framings().iter().fold(1u128, |acc, &m| {
        let width = if m <= -1 { (-m) as u128 } else { 0 };
        acc.saturating_mul(width)
    })
}

/// Walks the full path of `k` under the lowest-index reflection rule.
///
/// Requires a negative definite graph (that is what guarantees termination);
/// the step bound `4 n^2 max|m|` is generous enough that exceeding it is
/// reported as an internal error rather than an input condition.
pub fn full_path(graph: &PlumbingGraph, k: &CharVector) -> Result<PathOutcome> {
    validate_characteristic(graph, k)?;
    if !graph.is_negative_definite() {
        return Err(Error::Domain(
            "full paths are only defined on negative definite graphs".into(),
        ));
    }
    let mut values = k.values().to_vec();
    let (status, steps) = walk(graph, &mut values)?;
    Ok(PathOutcome {
        status,
        steps,
        final_vector: CharVector::new(values),
    })
}

/// The Maslov grading `(K^T Q^{-1} K + n) / 4`.
pub fn maslov_grading(graph: &PlumbingGraph, k: &CharVector) -> Result<Rational> {
    validate_characteristic(graph, k)?;
    let data = graph.inverse_data()?;
    Ok(grading_from_form(data, k.values(), graph.vertex_count()))
}

/// Grades `k` and walks its full path, for externally supplied candidate
/// vectors. Both pieces are returned regardless of whether the path ends
/// correctly; the caller decides what a failure means.
pub fn verify_vector(graph: &PlumbingGraph, k: &CharVector) -> Result<(GradedVector, PathOutcome)> {
    let grading = maslov_grading(graph, k)?;
    let outcome = full_path(graph, k)?;
    Ok((
        GradedVector {
            vector: k.clone(),
            grading,
        },
        outcome,
    ))
}

/// The correction term `d` of the boundary of the plumbing.
///
/// If the initial-vector lattice fits in `budget`, the search is exhaustive
/// and the result exact. Otherwise a fixed family of witness vectors is
/// probed — the parity-minimal vector (0 on even framings, -1 on odd, the
/// forced 1 on framing -1) and all of its single-coordinate `±2` bumps —
/// and the best verified grading is returned as a certified lower bound.
/// If no witness verifies, the budget excess is reported as an error.
pub fn correction_term(graph: &PlumbingGraph, budget: u64) -> Result<CorrectionTerm> {
    if !graph.is_negative_definite() {
        return Err(Error::Domain(
            "correction terms require a negative definite intersection form".into(),
        ));
    }
    let data = graph.inverse_data()?.clone();
    let count = initial_vector_count(graph);
    if count <= budget as u128 {
        exhaustive_search(graph, &data, count)
    } else {
        probe_witnesses(graph, &data, count, budget)
    }
}

// ---------------------------------------------------------------------------
// path walking
// ---------------------------------------------------------------------------

fn step_bound(graph: &PlumbingGraph) -> u64 {
    let n = graph.vertex_count() as u64;
    let max_m = graph
        .framings()
        .iter()
        .map(|&m| m.unsigned_abs())
        .max()
        .unwrap_or(1)
        .max(1);
    4 * n * n * max_m
}

/// One full path on a raw coordinate buffer. Scans for, in priority order:
/// a coordinate above its window (fail), all coordinates terminal (success),
/// the lowest-index coordinate sitting at `-m(v)` (reflect there). A vector
/// that is neither terminal nor reflectable has fallen below a window and
/// fails.
fn walk(graph: &PlumbingGraph, k: &mut [i64]) -> Result<(PathStatus, u64)> {
    let bound = step_bound(graph);
    let framings = graph.framings();
    let mut steps = 0u64;
    loop {
        let mut all_terminal = true;
        let mut reflect_at = None;
        for (v, &m) in framings.iter().enumerate() {
            let x = k[v];
            if x > -m {
                return Ok((PathStatus::Fails, steps));
            }
            if x == -m && reflect_at.is_none() {
                reflect_at = Some(v);
            }
            if !(m <= x && x <= -m - 2) {
                all_terminal = false;
            }
        }
        if all_terminal {
            return Ok((PathStatus::EndsCorrectly, steps));
        }
        let Some(v) = reflect_at else {
            return Ok((PathStatus::Fails, steps));
        };
        k[v] += 2 * framings[v];
        for &w in graph.neighbors(v) {
            k[w] += 2;
        }
        steps += 1;
        if steps > bound {
            return Err(Error::Internal(format!(
                "full path exceeded {bound} reflections; the step bound for \
                 negative definite graphs must be wrong"
            )));
        }
    }
}

fn grading_from_form(data: &InverseData, k: &[i64], n: usize) -> Rational {
    let mut q = BigInt::zero();
    for (i, &ki) in k.iter().enumerate() {
        if ki == 0 {
            continue;
        }
        for (j, &kj) in k.iter().enumerate() {
            if kj == 0 {
                continue;
            }
            q += &data.adjugate[i][j] * BigInt::from(ki) * BigInt::from(kj);
        }
    }
    let quad = Rational::new(q, data.det.clone());
    (quad + Rational::from(BigInt::from(n as i64))) / Rational::from(BigInt::from(4))
}

// ---------------------------------------------------------------------------
// exhaustive search
// ---------------------------------------------------------------------------

/// Scalar the Gray-code scan accumulates the quadratic form in: `i64` on the
/// fast path, `BigInt` when adjugate entries or running sums might not fit.
trait ScanValue: Clone + Eq + Ord + Hash {
    fn scan_zero() -> Self;
    /// `self += coeff * other`
    fn add_prod(&mut self, coeff: i64, other: &Self);
    fn to_bigint(&self) -> BigInt;
}

impl ScanValue for i64 {
    fn scan_zero() -> Self {
        0
    }

    fn add_prod(&mut self, coeff: i64, other: &Self) {
        *self += coeff * other;
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ScanValue for BigInt {
    fn scan_zero() -> Self {
        BigInt::zero()
    }

    fn add_prod(&mut self, coeff: i64, other: &Self) {
        *self += other * coeff;
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Mixed-radix reflected Gray-code enumeration of the initial window
/// lattice, maintaining `K`, `g = Z K` and `q = K^T Z K` incrementally,
/// where `Z = sign(det) * adjugate` so that `Q^{-1} = Z / |det|`.
///
/// Exactly one coordinate changes by `±2` per step, so the updates are
/// `q += 2 δ g[j] + δ² Z[j][j]` followed by `g += δ Z[:,j]`, an `O(n)`
/// step instead of the `O(n²)` full form evaluation.
struct GrayScan<V: ScanValue> {
    radix: Vec<usize>,
    digits: Vec<usize>,
    dirs: Vec<i8>,
    k: Vec<i64>,
    g: Vec<V>,
    q: V,
    /// Columns of `Z` (it is symmetric, so columns are rows).
    zcols: Vec<Vec<V>>,
}

impl<V: ScanValue> GrayScan<V> {
    fn new(graph: &PlumbingGraph, zcols: Vec<Vec<V>>) -> GrayScan<V> {
        let n = graph.vertex_count();
        let radix: Vec<usize> = graph
            .framings()
            .iter()
            .map(|&m| (-m) as usize) // negative definite => m <= -1
            .collect();
        let k: Vec<i64> = graph.framings().iter().map(|&m| m + 2).collect();
        let mut g = vec![V::scan_zero(); n];
        for j in 0..n {
            if k[j] == 0 {
                continue;
            }
            for i in 0..n {
                g[i].add_prod(k[j], &zcols[j][i]);
            }
        }
        let mut q = V::scan_zero();
        for i in 0..n {
            if k[i] != 0 {
                q.add_prod(k[i], &g[i]);
            }
        }
        GrayScan {
            radix,
            digits: vec![0; n],
            dirs: vec![1; n],
            k,
            g,
            q,
        zcols,
        }
    }

    /// Steps to the next lattice vector; `false` once all are visited.
    fn advance(&mut self) -> bool {
        let n = self.radix.len();
        let mut j = 0;
        loop {
            if j == n {
                return false;
            }
            let next = self.digits[j] as i64 + self.dirs[j] as i64;
            if next < 0 || next >= self.radix[j] as i64 {
                self.dirs[j] = -self.dirs[j];
                j += 1;
                continue;
            }
            let delta = 2 * self.dirs[j] as i64;
            self.digits[j] = next as usize;
            self.q.add_prod(2 * delta, &self.g[j]);
            let diag = self.zcols[j][j].clone();
            self.q.add_prod(delta * delta, &diag);
            for i in 0..n {
                let zij = self.zcols[j][i].clone();
                self.g[i].add_prod(delta, &zij);
            }
            self.k[j] += delta;
            return true;
        }
    }
}

/// Largest `|Z|` entry times worst-case coordinates, used to decide whether
/// the `i64` scan can possibly overflow.
fn i64_scan_is_safe(graph: &PlumbingGraph, data: &InverseData) -> bool {
    let n = graph.vertex_count() as u128;
    let max_z = data
        .adjugate
        .iter()
        .flatten()
        .map(|z| z.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let Ok(max_z) = u128::try_from(&max_z) else {
        return false;
    };
    let max_k = graph
        .framings()
        .iter()
        .map(|&m| m.unsigned_abs() as u128)
        .max()
        .unwrap_or(1);
    // |q| <= n^2 * maxZ * maxK^2; add a 16x margin for the update terms.
    n.checked_mul(n)
        .and_then(|x| x.checked_mul(max_z))
        .and_then(|x| x.checked_mul(max_k))
        .and_then(|x| x.checked_mul(max_k))
        .and_then(|x| x.checked_mul(16))
        .map(|x| x <= i64::MAX as u128)
        .unwrap_or(false)
}

fn exhaustive_search(
    graph: &PlumbingGraph,
    data: &InverseData,
    count: u128,
) -> Result<CorrectionTerm> {
    let n = graph.vertex_count();
    let sign = if data.det.is_negative() { -1i64 } else { 1 };
    let nden = data.det.abs();
    if i64_scan_is_safe(graph, data) {
        let zcols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        i64::try_from(&data.adjugate[i][j]).expect("checked by i64_scan_is_safe")
                            * sign
                    })
                    .collect()
            })
            .collect();
        scan_levels(graph, zcols, &nden, count)
    } else {
        let zcols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| (0..n).map(|i| &data.adjugate[i][j] * sign).collect())
            .collect();
        scan_levels(graph, zcols, &nden, count)
    }
}

fn scan_levels<V: ScanValue>(
    graph: &PlumbingGraph,
    zcols: Vec<Vec<V>>,
    nden: &BigInt,
    count: u128,
) -> Result<CorrectionTerm> {
    // Pass 1: histogram of scaled form values q = |det| * K^T Q^{-1} K.
    let mut histogram: HashMap<V, u64> = HashMap::new();
    let mut scan = GrayScan::new(graph, zcols.clone());
    loop {
        *histogram.entry(scan.q.clone()).or_insert(0) += 1;
        if !scan.advance() {
            break;
        }
    }
    let mut levels: Vec<V> = histogram.into_keys().collect();
    levels.sort();
    levels.reverse();
    // Pass 2: walk candidates level by level from the top; the maximal
    // grading with a correctly-ending path is the correction term.
    let mut buffer = vec![0i64; graph.vertex_count()];
    for level in levels {
        let mut scan = GrayScan::new(graph, zcols.clone());
        loop {
            if scan.q == level {
                buffer.copy_from_slice(&scan.k);
                if walk(graph, &mut buffer)?.0 == PathStatus::EndsCorrectly {
                    let d = grading_from_scaled(&level, nden, graph.vertex_count());
                    return Ok(CorrectionTerm::Exhaustive { d, examined: count });
                }
            }
            if !scan.advance() {
                break;
            }
        }
    }
    Err(Error::Internal(
        "no initial vector ends correctly; that contradicts the structure theory".into(),
    ))
}

/// `(q / nden + n) / 4` where `q` is the scaled form value.
fn grading_from_scaled<V: ScanValue>(q: &V, nden: &BigInt, n: usize) -> Rational {
    let numer = q.to_bigint() + BigInt::from(n as i64) * nden;
    Rational::new(numer, BigInt::from(4) * nden)
}

// ---------------------------------------------------------------------------
// witness probing
// ---------------------------------------------------------------------------

fn probe_witnesses(
    graph: &PlumbingGraph,
    data: &InverseData,
    count: u128,
    budget: u64,
) -> Result<CorrectionTerm> {
    let n = graph.vertex_count();
    let base: Vec<i64> = graph
        .framings()
        .iter()
        .map(|&m| {
            if m % 2 == 0 {
                0
            } else if m == -1 {
                1 // the only value in the window [1, 1]
            } else {
                -1
            }
        })
        .collect();
    let mut candidates = vec![base.clone()];
    for w in 0..n {
        let m = graph.framing(w);
        for delta in [2i64, -2] {
            let bumped = base[w] + delta;
            if m + 2 <= bumped && bumped <= -m {
                let mut cand = base.clone();
                cand[w] = bumped;
                candidates.push(cand);
            }
        }
    }
    let mut best: Option<(Rational, CharVector)> = None;
    let mut buffer = vec![0i64; n];
    for cand in candidates {
        buffer.copy_from_slice(&cand);
        if walk(graph, &mut buffer)?.0 != PathStatus::EndsCorrectly {
            continue;
        }
        let grading = grading_from_form(data, &cand, n);
        if best.as_ref().is_none_or(|(g, _)| grading > *g) {
            best = Some((grading, CharVector::new(cand)));
        }
    }
    match best {
        Some((d, witness)) => Ok(CorrectionTerm::WitnessBound {
            d,
            witness,
            search_space: count,
        }),
        None => Err(Error::BudgetExceeded {
            required: count,
            budget,
        }),
    }
}

// ---------------------------------------------------------------------------
// vector files
// ---------------------------------------------------------------------------

/// Parses one integer vector per line. `#` starts a comment, blank lines are
/// skipped, entries may be separated by whitespace or commas, and enclosing
/// parentheses are tolerated.
pub fn parse_vector_lines(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut vectors = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").replace(['(', ')'], " ");
        let entries = split_tokens(&line)
            .map(|tok| {
                tok.parse::<i64>().map_err(|e| {
                    Error::Parse(format!("line {}: bad entry {tok:?}: {e}", lineno + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if !entries.is_empty() {
            vectors.push(entries);
        }
    }
    if vectors.is_empty() {
        return Err(Error::Parse("no vectors found in input".into()));
    }
    Ok(vectors)
}

/// Parses a coordinate ordering: a permutation of `0..n` (any line layout,
/// same comment rules as [`parse_vector_lines`]) where the `i`-th number is
/// the canonical vertex index of the `i`-th coordinate in the vector file.
pub fn parse_ordering(text: &str) -> Result<Vec<usize>> {
    let mut ordering = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").replace(['(', ')'], " ");
        for tok in split_tokens(&line) {
            ordering.push(tok.parse::<usize>().map_err(|e| {
                Error::Parse(format!("line {}: bad index {tok:?}: {e}", lineno + 1))
            })?);
        }
    }
    validate_permutation(&ordering)?;
    Ok(ordering)
}

fn split_tokens(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
}

fn validate_permutation(ordering: &[usize]) -> Result<()> {
    let n = ordering.len();
    let mut seen = vec![false; n];
    for &i in ordering {
        if i >= n || seen[i] {
            return Err(Error::Parse(format!(
                "ordering is not a permutation of 0..{n}: index {i} out of place"
            )));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Reorders `entries` (in file-coordinate order) into canonical vertex
/// order: entry `i` lands at vertex `ordering[i]`.
pub fn apply_ordering(entries: &[i64], ordering: &[usize]) -> Result<Vec<i64>> {
    if entries.len() != ordering.len() {
        return Err(Error::Domain(format!(
            "vector has {} entries but the ordering lists {} coordinates",
            entries.len(),
            ordering.len()
        )));
    }
    validate_permutation(ordering)?;
    let mut out = vec![0i64; entries.len()];
    for (i, &target) in ordering.iter().enumerate() {
        out[target] = entries[i];
    }
    Ok(out)
}
