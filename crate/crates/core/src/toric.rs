//! Toric solving of the binomials that survive a selection, and assembly of
//! the resulting monomial maps `x_k = c_k * t_1^v_1k * ... * t_d^v_dk`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{classify, EquationStatus, Selection};
use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::lattice::{hnf, IntegerMatrix};
use crate::poly::PolynomialSystem;

pub const DEFAULT_BRANCH_LIMIT: usize = 64;

/// The binomials left after zeroing a selection, as `x^A = gamma` over the
/// linked variables.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSystem {
    /// Indices of the surviving equations.
    pub equations: Vec<usize>,
    /// Variables occurring in a surviving monomial, ascending.
    pub linked: Vec<usize>,
    /// Variables neither selected nor linked, ascending.
    pub free: Vec<usize>,
    /// One row per surviving equation: exponent difference on `linked`.
    pub a: IntegerMatrix,
    pub gamma: Vec<BigRational>,
}

pub fn residual(sys: &PolynomialSystem, m: &IncidenceMatrix, sel: &Selection) -> Result<ResidualSystem> {
    let class = classify(sys, m, sel)?;
    if let Some(e) = class
        .statuses
        .iter()
        .position(|s| *s == EquationStatus::Mixed)
    {
        return Err(Error::MixedEquation { equation: e });
    }
    let n = sys.num_vars();
    let mut is_linked = vec![false; n];
    for &e in &class.residual {
        let eq = &sys.equations()[e];
        if eq.len() != 2 {
            return Err(Error::NotBinomial {
                equation: e,
                terms: eq.len(),
            });
        }
        for t in eq {
            for (k, &x) in t.exponents.iter().enumerate() {
                if x != 0 {
                    is_linked[k] = true;
                }
            }
        }
    }
    let linked: Vec<usize> = (0..n).filter(|&k| is_linked[k]).collect();
    let free: Vec<usize> = (0..n)
        .filter(|&k| !is_linked[k] && !sel.contains(k))
        .collect();
    let mut rows = Vec::with_capacity(class.residual.len());
    let mut gamma = Vec::with_capacity(class.residual.len());
    for &e in &class.residual {
        let eq = &sys.equations()[e];
        let (ta, tb) = (&eq[0], &eq[1]);
        rows.push(
            linked
                .iter()
                .map(|&k| ta.exponents[k] - tb.exponents[k])
                .collect::<Vec<i64>>(),
        );
        gamma.push(-(&tb.coeff / &ta.coeff));
    }
    Ok(ResidualSystem {
        equations: class.residual,
        a: IntegerMatrix::from_rows(&rows, linked.len()),
        linked,
        free,
        gamma,
    })
}

/// One particular solution of `x^A = gamma` on the torus.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub coeffs: Vec<Complex64>,
    /// Argument of each coordinate as an exact fraction of a full turn in `[0, 1)`.
    pub turns: Vec<BigRational>,
    pub log_moduli: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ToricSolution {
    /// Some product of the right-hand sides contradicts a relation among the
    /// exponent rows.
    Inconsistent,
    /// One particular solution per connected component, ordered by argument.
    Branches(Vec<Branch>),
}

impl ToricSolution {
    pub fn branches(&self) -> &[Branch] {
        match self {
            ToricSolution::Inconsistent => &[],
            ToricSolution::Branches(b) => b,
        }
    }
}

/// Solves `prod_k x_k^A[i][k] = gamma[i]` over nonzero complex `x`.
///
/// Consistency is decided exactly: for every integer left-kernel vector `w`
/// of `A`, `gamma^w` must be 1. The solution set has one component per
/// branch of the triangular system obtained from the Hermite forms of `A`;
/// each branch yields a particular solution, and the integer kernel of `A`
/// parametrizes the rest.
pub fn solve_coefficients(
    a: &IntegerMatrix,
    gamma: &[BigRational],
    branch_limit: usize,
) -> Result<ToricSolution> {
    if gamma.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{} right-hand sides for {} equations",
            gamma.len(),
            a.rows()
        )));
    }
    if let Some(i) = gamma.iter().position(Zero::is_zero) {
        return Err(Error::InvalidArgument(format!("right-hand side {i} is zero")));
    }
    let m = a.cols();
    let row_form = hnf(a);
    let rank = row_form.rank;

    for i in rank..a.rows() {
        if !rational_power_product(gamma, row_form.u.row(i))?.is_one() {
            return Ok(ToricSolution::Inconsistent);
        }
    }

    // Full-rank part H' = first `rank` rows; column Hermite form H' W = [L | 0]
    // with W = U2^T from the row form of H'^T.
    let reduced = row_form.h.select_rows(0..rank);
    let col_form = hnf(&reduced.transpose());
    let w = col_form.u.transpose();
    // L[i][j] = H2[j][i] for j <= i
    let lower = |i: usize, j: usize| col_form.h.get(j, i);

    let mut count = BigInt::one();
    for i in 0..rank {
        count *= lower(i, i);
    }
    if count > BigInt::from(branch_limit) {
        return Err(Error::BranchLimit {
            count: count.to_string(),
            limit: branch_limit,
        });
    }
    let radices: Vec<usize> = (0..rank)
        .map(|i| lower(i, i).to_usize().expect("bounded by branch limit"))
        .collect();

    // Transformed right-hand sides in polar form.
    let gamma_polar: Vec<Polar> = gamma.iter().map(Polar::from_rational).collect();
    let rhs: Vec<Polar> = (0..rank)
        .map(|i| Polar::product(&gamma_polar, row_form.u.row(i)))
        .collect();

    let total = count.to_usize().expect("bounded by branch limit");
    let mut branches = Vec::with_capacity(total);
    for index in 0..total {
        let mut digits = Vec::with_capacity(rank);
        let mut rest = index;
        for &r in &radices {
            digits.push(rest % r);
            rest /= r;
        }
        let mut y: Vec<Polar> = Vec::with_capacity(m);
        for i in 0..rank {
            let mut ln = rhs[i].ln;
            let mut turn = rhs[i].turn.clone();
            for (j, yj) in y.iter().enumerate() {
                let l = lower(i, j);
                if l.is_zero() {
                    continue;
                }
                ln -= l.to_f64().unwrap_or(f64::NAN) * yj.ln;
                turn -= BigRational::from_integer(l.clone()) * &yj.turn;
            }
            let d = lower(i, i);
            let df = d.to_f64().unwrap_or(f64::NAN);
            turn += BigRational::from_integer(BigInt::from(digits[i]));
            y.push(Polar {
                ln: ln / df,
                turn: reduce_turn(turn / BigRational::from_integer(d.clone())),
            });
        }
        y.resize(m, Polar::one());
        let x: Vec<Polar> = (0..m).map(|k| Polar::product(&y, w.row(k))).collect();
        branches.push(Branch {
            coeffs: x.iter().map(Polar::to_complex).collect(),
            turns: x.iter().map(|p| p.turn.clone()).collect(),
            log_moduli: x.iter().map(|p| p.ln).collect(),
        });
    }
    branches.sort_by(|a, b| a.turns.cmp(&b.turns));
    Ok(ToricSolution::Branches(branches))
}

/// `prod_j gamma_j^e_j`, exactly.
fn rational_power_product(gamma: &[BigRational], exps: &[BigInt]) -> Result<BigRational> {
    let mut num = BigRational::one();
    for (g, e) in gamma.iter().zip(exps) {
        if e.is_zero() {
            continue;
        }
        let p = e
            .abs()
            .to_u32()
            .ok_or_else(|| Error::Overflow(format!("exponent {e} in consistency check")))?;
        let gp = num_traits::pow::pow(g.clone(), p as usize);
        if e.is_negative() {
            num /= gp;
        } else {
            num *= gp;
        }
    }
    Ok(num)
}

/// A nonzero complex number as log-modulus and exact argument in turns.
#[derive(Debug, Clone)]
struct Polar {
    ln: f64,
    turn: BigRational,
}

impl Polar {
    fn one() -> Self {
        Self {
            ln: 0.0,
            turn: BigRational::zero(),
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        let turn = if q.is_negative() {
            BigRational::new(1.into(), 2.into())
        } else {
            BigRational::zero()
        };
        Self {
            ln: ln_abs(q.numer()) - ln_abs(q.denom()),
            turn,
        }
    }

    /// `prod_j base_j^e_j`.
    fn product(base: &[Polar], exps: &[BigInt]) -> Self {
        let mut out = Self::one();
        for (b, e) in base.iter().zip(exps) {
            if e.is_zero() {
                continue;
            }
            if b.ln != 0.0 {
                out.ln += e.to_f64().unwrap_or(f64::NAN) * b.ln;
            }
            out.turn += BigRational::from_integer(e.clone()) * &b.turn;
        }
        out.turn = reduce_turn(out.turn);
        out
    }

    fn to_complex(&self) -> Complex64 {
        let r = self.ln.exp();
        let four = &self.turn * BigRational::from_integer(4.into());
        if four.is_integer() {
            // exact quarter turns
            return match four.to_integer().to_i64() {
                Some(0) => Complex64::new(r, 0.0),
                Some(1) => Complex64::new(0.0, r),
                Some(2) => Complex64::new(-r, 0.0),
                _ => Complex64::new(0.0, -r),
            };
        }
        let angle = std::f64::consts::TAU * self.turn.to_f64().unwrap_or(0.0);
        Complex64::from_polar(r, angle)
    }
}

fn reduce_turn(t: BigRational) -> BigRational {
    let f = t.floor();
    t - f
}

fn ln_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonomialMap {
    pub nvars: usize,
    /// Variables with `c_k = 0`.
    pub zero_set: Vec<usize>,
    /// Variables carrying their own parameter with `c_k = 1`.
    pub free_set: Vec<usize>,
    pub linked: Vec<usize>,
    pub coeffs: Vec<Complex64>,
    /// `d` rows of `nvars` exponents; parameter `i` is row `i`. Free
    /// variables take the first parameters, then one per kernel vector.
    pub exponents: Vec<Vec<i64>>,
}

impl MonomialMap {
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_zero(&self, var: usize) -> bool {
        self.coeffs[var] == Complex64::new(0.0, 0.0)
    }

    /// Exponents of variable `var` across the parameters.
    pub fn column(&self, var: usize) -> Vec<i64> {
        self.exponents.iter().map(|row| row[var]).collect()
    }

    pub fn nonzero_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&k| !self.is_zero(k)).collect()
    }

    /// Coordinates at the parameter point `t`.
    pub fn evaluate(&self, t: &[Complex64]) -> Vec<Complex64> {
        (0..self.nvars)
            .map(|k| {
                if self.is_zero(k) {
                    return Complex64::new(0.0, 0.0);
                }
                let mut x = self.coeffs[k];
                for (row, ti) in self.exponents.iter().zip(t) {
                    let e = row[k];
                    if e != 0 {
                        x *= ti.powi(e as i32);
                    }
                }
                x
            })
            .collect()
    }
}

/// Assembles the map for a selection from the kernel basis `v` of the
/// residual exponent matrix and a particular solution on `res.linked`.
pub fn build_map(
    sel: &Selection,
    res: &ResidualSystem,
    v: &IntegerMatrix,
    particular: &[Complex64],
    nvars: usize,
) -> Result<MonomialMap> {
    if v.cols() != res.linked.len() || particular.len() != res.linked.len() {
        return Err(Error::DimensionMismatch(format!(
            "kernel width {} and particular solution length {} for {} linked variables",
            v.cols(),
            particular.len(),
            res.linked.len()
        )));
    }
    let covered = sel.len() + res.linked.len() + res.free.len();
    if covered != nvars || sel.members().iter().any(|&k| k >= nvars) {
        return Err(Error::DimensionMismatch(format!(
            "selection, linked and free variables cover {covered} of {nvars}"
        )));
    }
    let kernel = v.to_i64_rows()?;
    let f = res.free.len();
    let d = f + kernel.len();
    let mut exponents = vec![vec![0i64; nvars]; d];
    let mut coeffs = vec![Complex64::new(0.0, 0.0); nvars];
    for (i, &k) in res.free.iter().enumerate() {
        exponents[i][k] = 1;
        coeffs[k] = Complex64::new(1.0, 0.0);
    }
    for (j, &k) in res.linked.iter().enumerate() {
        coeffs[k] = particular[j];
        for (i, row) in kernel.iter().enumerate() {
            exponents[f + i][k] = row[j];
        }
    }
    Ok(MonomialMap {
        nvars,
        zero_set: sel.members().to_vec(),
        free_set: res.free.clone(),
        linked: res.linked.clone(),
        coeffs,
        exponents,
    })
}

/// Checks the map against the system at `samples` random parameter points
/// with moduli in `[0.5, 2]`.
pub fn verify_map(sys: &PolynomialSystem, map: &MonomialMap, samples: usize, tol: f64, seed: u64) -> bool {
    if map.nvars != sys.num_vars() {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = Complex64::new(0.0, 0.0);
    for _ in 0..samples.max(1) {
        let t: Vec<Complex64> = (0..map.dim())
            .map(|_| {
                let r: f64 = rng.gen_range(0.5..=2.0);
                let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                Complex64::from_polar(r, theta)
            })
            .collect();
        let x = map.evaluate(&t);
        for eq in sys.equations() {
            let mut sum = zero;
            let mut biggest: f64 = 0.0;
            for term in eq {
                let mut v = Complex64::new(term.coeff.to_f64().unwrap_or(f64::NAN), 0.0);
                for (k, &e) in term.exponents.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if x[k] == zero {
                        if e < 0 {
                            return false;
                        }
                        v = zero;
                        break;
                    }
                    v *= x[k].powi(e as i32);
                }
                biggest = biggest.max(v.norm());
                sum += v;
            }
            let bound = tol * (1.0 + biggest);
            if sum.norm().is_nan() || sum.norm() > bound {
                return false;
            }
        }
    }
    true
}

/// Number of components of `x^A = gamma` by brute force: the gcd of all
/// maximal nonzero minors.
#[cfg(test)]
pub(crate) fn determinantal_divisor(a: &IntegerMatrix) -> BigInt {
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = combos(n - 1, k);
        for mut c in combos(n - 1, k - 1) {
            c.push(n - 1);
            out.push(c);
        }
        out
    }
    for k in (1..=a.rows().min(a.cols())).rev() {
        let mut g = BigInt::zero();
        for rs in combos(a.rows(), k) {
            for cs in combos(a.cols(), k) {
                let sub = IntegerMatrix::from_big_rows(
                    rs.iter()
                        .map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect())
                        .collect(),
                    k,
                );
                g = num_integer::Integer::gcd(&g, &sub.determinant().unwrap());
            }
        }
        if !g.is_zero() {
            return g;
        }
    }
    BigInt::one()
}
