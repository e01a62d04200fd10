//! End-to-end decomposition: consistent selections, toric branches, and
//! removal of maps whose image lies in the closure of another.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::enumerate::{enumerate_consistent_with_stats, EnumerationOptions, Selection};
use crate::error::{Error, Result};
use crate::incidence::build_incidence;
use crate::lattice::{kernel_lattice, IntegerMatrix};
use crate::poly::PolynomialSystem;
use crate::toric::{
    build_map, residual, solve_coefficients, verify_map, MonomialMap, ToricSolution,
    DEFAULT_BRANCH_LIMIT,
};

/// Relative tolerance for comparing coefficient products in [`contains`].
const COEFF_RTOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct DecomposeOptions {
    pub enumeration: EnumerationOptions,
    /// Tolerance for [`verify_map`] on every emitted map.
    pub tolerance: f64,
    pub samples: usize,
    pub seed: u64,
    pub branch_limit: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            enumeration: EnumerationOptions::default(),
            tolerance: 1e-8,
            samples: 10,
            seed: 42,
            branch_limit: DEFAULT_BRANCH_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub selection: Selection,
    pub branch: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DecompositionStats {
    /// Search nodes visited by the selection enumeration.
    pub nodes: u64,
    pub pruned: u64,
    /// Consistent selections found.
    pub selections: usize,
    /// Toric branches solved, before containment filtering.
    pub branches: usize,
    /// Selections whose residual system has no toric solution.
    pub inconsistent: usize,
    /// Maps dropped because another map contains them.
    pub contained: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub var_names: Vec<String>,
    pub maps: Vec<MonomialMap>,
    pub provenance: Vec<Provenance>,
    pub stats: DecompositionStats,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Machine-readable form; wall time is left out so equal inputs give
    /// byte-identical output.
    pub fn to_json(&self) -> Value {
        let names = &self.var_names;
        let maps: Vec<Value> = self
            .maps
            .iter()
            .map(|map| {
                let mut coeff = Map::new();
                let mut exponents = Map::new();
                for (k, name) in names.iter().enumerate() {
                    let c = map.coeffs[k];
                    coeff.insert(name.clone(), serde_json::json!([clean(c.re), clean(c.im)]));
                    exponents.insert(name.clone(), serde_json::json!(map.column(k)));
                }
                serde_json::json!({
                    "zero": map.zero_set.iter().map(|&k| &names[k]).collect::<Vec<_>>(),
                    "free": map.free_set.iter().map(|&k| &names[k]).collect::<Vec<_>>(),
                    "dim": map.dim(),
                    "coeff": coeff,
                    "exponents": exponents,
                })
            })
            .collect();
        serde_json::json!({
            "count": self.maps.len(),
            "stats": self.stats,
            "maps": maps,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }

    /// Human-readable listing, one block per map.
    pub fn render(&self) -> String {
        let mut out = format!("{} component(s)\n", self.maps.len());
        for (i, map) in self.maps.iter().enumerate() {
            let zero: Vec<&str> = map.zero_set.iter().map(|&k| self.var_names[k].as_str()).collect();
            out.push_str(&format!(
                "\nmap {} (dim {}) zero: {{{}}}\n",
                i + 1,
                map.dim(),
                zero.join(", ")
            ));
            for (k, name) in self.var_names.iter().enumerate() {
                out.push_str(&format!("  {name} = {}\n", render_coordinate(map, k)));
            }
        }
        out
    }
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn render_coordinate(map: &MonomialMap, k: usize) -> String {
    if map.is_zero(k) {
        return "0".into();
    }
    let c = map.coeffs[k];
    let mut parts = Vec::new();
    if c != Complex64::new(1.0, 0.0) {
        if c.im == 0.0 {
            parts.push(format!("{}", c.re));
        } else {
            parts.push(format!("({}{:+}i)", c.re, c.im));
        }
    }
    for i in 0..map.dim() {
        match map.exponents[i][k] {
            0 => {}
            1 => parts.push(format!("t{}", i + 1)),
            e => parts.push(format!("t{}^{}", i + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Integer relations among the exponent columns of the nonzero coordinates:
/// rows `w` (width `nvars`, zero on the zero set) with `sum_k w_k v_k = 0`,
/// so that `prod x_k^w_k = prod c_k^w_k` holds on the image.
pub fn lattice_relations(map: &MonomialMap) -> IntegerMatrix {
    let nz = map.nonzero_vars();
    let basis = kernel_lattice(&exponent_block(map, &nz));
    let mut out = IntegerMatrix::zeros(basis.rows(), map.nvars);
    for i in 0..basis.rows() {
        for (j, &k) in nz.iter().enumerate() {
            out.set(i, k, basis.get(i, j).clone());
        }
    }
    out
}

/// `d x |vars|` matrix of the map's exponent columns for `vars`.
fn exponent_block(map: &MonomialMap, vars: &[usize]) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = map
        .exponents
        .iter()
        .map(|row| vars.iter().map(|&k| row[k]).collect())
        .collect();
    IntegerMatrix::from_rows(&rows, vars.len())
}

/// Whether the image of `inner` lies in the closure of the image of `outer`.
///
/// Exact on the exponent side: the zero pattern of `inner` must be reachable
/// in the closure of `outer` (a one-parameter limit that keeps the inner
/// support and sends the remaining outer coordinates to zero), and every
/// relation of `outer` supported on the inner support must hold on `inner`.
/// Coefficient products are compared with a relative tolerance of 1e-10.
pub fn contains(outer: &MonomialMap, inner: &MonomialMap) -> Result<bool> {
    if outer.nvars != inner.nvars {
        return Err(Error::DimensionMismatch(format!(
            "maps over {} and {} variables",
            outer.nvars, inner.nvars
        )));
    }
    let n = outer.nvars;
    if (0..n).any(|k| outer.is_zero(k) && !inner.is_zero(k)) {
        return Ok(false);
    }
    let same_support = (0..n).all(|k| outer.is_zero(k) == inner.is_zero(k));
    // Points of the closure outside the image's own support form a set of
    // strictly smaller dimension.
    if inner.dim() > outer.dim() || (!same_support && inner.dim() == outer.dim()) {
        return Ok(false);
    }

    let support = inner.nonzero_vars();
    let relations = kernel_lattice(&exponent_block(outer, &support));
    let inner_block = exponent_block(inner, &support);
    for i in 0..relations.rows() {
        let w = relations.row(i);
        for p in 0..inner_block.rows() {
            let s = w
                .iter()
                .zip(inner_block.row(p))
                .fold(BigInt::zero(), |acc, (a, b)| acc + a * b);
            if !s.is_zero() {
                return Ok(false);
            }
        }
        if !coefficient_products_agree(w, &support, inner, outer) {
            return Ok(false);
        }
    }

    if !same_support {
        let vanishing: Vec<usize> = (0..n)
            .filter(|&k| !outer.is_zero(k) && inner.is_zero(k))
            .collect();
        if !limit_reaches(outer, &support, &vanishing) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn coefficient_products_agree(
    w: &[BigInt],
    support: &[usize],
    inner: &MonomialMap,
    outer: &MonomialMap,
) -> bool {
    let mut log_ratio = 0.0;
    let mut angle = 0.0;
    for (wk, &k) in w.iter().zip(support) {
        if wk.is_zero() {
            continue;
        }
        let e = wk.to_f64().unwrap_or(f64::NAN);
        let (ci, co) = (inner.coeffs[k], outer.coeffs[k]);
        log_ratio += e * (ci.norm().ln() - co.norm().ln());
        angle += e * (ci.arg() - co.arg());
    }
    let ratio = Complex64::from_polar(log_ratio.exp(), angle);
    (ratio - 1.0).norm() <= COEFF_RTOL * ratio.norm().max(1.0)
}

/// Whether some integer direction `l` in parameter space has `<l, v_k> = 0`
/// for `k` in `keep` and `<l, v_k> > 0` for `k` in `vanish`.
fn limit_reaches(outer: &MonomialMap, keep: &[usize], vanish: &[usize]) -> bool {
    // Directions orthogonal to the kept columns.
    let keep_rows = exponent_block(outer, keep).transpose();
    let directions = kernel_lattice(&keep_rows);
    if directions.rows() == 0 {
        return false;
    }
    let vanish_block = exponent_block(outer, vanish);
    let ineqs: Vec<Vec<BigInt>> = (0..vanish.len())
        .map(|c| {
            (0..directions.rows())
                .map(|r| {
                    directions
                        .row(r)
                        .iter()
                        .enumerate()
                        .fold(BigInt::zero(), |acc, (i, d)| acc + d * vanish_block.get(i, c))
                })
                .collect()
        })
        .collect();
    strictly_feasible(ineqs)
}

/// Whether `g . mu > 0` for every row `g` has a solution, by Fourier-Motzkin
/// elimination on the homogeneous strict system.
fn strictly_feasible(mut rows: Vec<Vec<BigInt>>) -> bool {
    let nvars = rows.first().map_or(0, Vec::len);
    for j in 0..nvars {
        if rows.is_empty() {
            return true;
        }
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return false;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r[j].is_positive() {
                pos.push(r);
            } else if r[j].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                let a = -&q[j];
                let b = &p[j];
                let combo: Vec<BigInt> = p.iter().zip(q).map(|(x, y)| &a * x + b * y).collect();
                rest.push(primitive(combo));
            }
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    rows.is_empty()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    use num_integer::Integer;
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

struct SelectionResult {
    maps: Vec<(MonomialMap, Provenance)>,
    inconsistent: bool,
}

fn solve_selection(
    sys: &PolynomialSystem,
    incidence: &crate::incidence::IncidenceMatrix,
    sel: &Selection,
    opts: &DecomposeOptions,
) -> Result<SelectionResult> {
    let res = residual(sys, incidence, sel)?;
    let solution = solve_coefficients(&res.a, &res.gamma, opts.branch_limit)?;
    let ToricSolution::Branches(branches) = solution else {
        return Ok(SelectionResult {
            maps: Vec::new(),
            inconsistent: true,
        });
    };
    let kernel = kernel_lattice(&res.a);
    let mut maps = Vec::with_capacity(branches.len());
    for (b, branch) in branches.iter().enumerate() {
        let map = build_map(sel, &res, &kernel, &branch.coeffs, sys.num_vars())?;
        if !verify_map(sys, &map, opts.samples, opts.tolerance, opts.seed) {
            return Err(Error::VerificationFailed {
                selection: sel.names(sys.vars()).into_iter().map(String::from).collect(),
            });
        }
        maps.push((
            map,
            Provenance {
                selection: sel.clone(),
                branch: b,
            },
        ));
    }
    Ok(SelectionResult {
        maps,
        inconsistent: false,
    })
}

/// Decomposes the solution set of a binomial system into monomial maps.
pub fn decompose(sys: &PolynomialSystem, opts: &DecomposeOptions) -> Result<Decomposition> {
    let start = Instant::now();
    sys.require_binomial()?;
    let incidence = build_incidence(sys);
    let enumeration = enumerate_consistent_with_stats(sys, &incidence, &opts.enumeration)?;
    let results: Vec<Result<SelectionResult>> = enumeration
        .selections
        .par_iter()
        .map(|sel| solve_selection(sys, &incidence, sel, opts))
        .collect();

    let mut stats = DecompositionStats {
        nodes: enumeration.stats.nodes,
        pruned: enumeration.stats.pruned,
        selections: enumeration.selections.len(),
        ..Default::default()
    };
    let mut candidates = Vec::new();
    for r in results {
        let r = r?;
        if r.inconsistent {
            stats.inconsistent += 1;
        }
        stats.branches += r.maps.len();
        candidates.extend(r.maps);
    }
    candidates.sort_by(|(_, a), (_, b)| {
        a.selection
            .canonical_cmp(&b.selection)
            .then(a.branch.cmp(&b.branch))
    });

    let keep = filter_contained(&candidates)?;
    let mut maps = Vec::with_capacity(keep.len());
    let mut provenance = Vec::with_capacity(keep.len());
    for (i, (map, prov)) in candidates.into_iter().enumerate() {
        if keep[i] {
            maps.push(map);
            provenance.push(prov);
        }
    }
    stats.contained = stats.branches - maps.len();
    stats.elapsed = start.elapsed();
    Ok(Decomposition {
        var_names: sys.vars().names().to_vec(),
        maps,
        provenance,
        stats,
    })
}

/// Keeps a map unless another contains it; of two maps with equal images the
/// earlier one in canonical order survives.
fn filter_contained(candidates: &[(MonomialMap, Provenance)]) -> Result<Vec<bool>> {
    let n = candidates.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (inner, outer) = (&candidates[i].0, &candidates[j].0);
            if contains(outer, inner)? && (j < i || !contains(inner, outer)?) {
                keep[i] = false;
                break;
            }
        }
    }
    Ok(keep)
}
