//! Enumeration of zero-variable selections by row expansion over the
//! incidence matrix.
//!
//! [`enumerate_covers`] is the plain permanent-style expansion: every row must
//! be hit by some selected variable. [`enumerate_consistent`] also lets a row
//! stay uncovered (all its variables nonzero) as long as no binomial ends up
//! with exactly one vanishing monomial.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::VarSet;
use crate::error::Result;
use crate::incidence::IncidenceMatrix;
use crate::poly::{PolynomialSystem, VariableTable};

/// A set of variables to be set to zero, kept in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Selection {
    members: Vec<usize>,
}

impl Selection {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, var: usize) -> bool {
        self.members.binary_search(&var).is_ok()
    }

    pub fn to_varset(&self, nvars: usize) -> VarSet {
        VarSet::from_indices(nvars, self.members.iter().copied())
    }

    pub fn names<'a>(&self, vars: &'a VariableTable) -> Vec<&'a str> {
        self.members.iter().map(|&k| vars.name(k)).collect()
    }

    /// Size first, then lexicographic.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationStatus {
    /// Every term is annihilated.
    Vanished,
    /// No term is annihilated.
    Residual,
    /// Some but not all terms are annihilated.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub statuses: Vec<EquationStatus>,
    pub vanished: usize,
    pub residual: Vec<usize>,
}

impl Classification {
    pub fn has_mixed(&self) -> bool {
        self.statuses.contains(&EquationStatus::Mixed)
    }
}

pub fn classify(
    sys: &PolynomialSystem,
    m: &IncidenceMatrix,
    sel: &Selection,
) -> Result<Classification> {
    m.check_selection_active(sel, sys.vars())?;
    let set = sel.to_varset(m.num_vars());
    let mut statuses = Vec::with_capacity(sys.num_equations());
    let mut vanished = 0;
    let mut residual = Vec::new();
    for (e, rows) in m.term_rows().iter().enumerate() {
        let covered = rows.iter().filter(|&&r| m.row_covered_by(r, &set)).count();
        let status = if covered == rows.len() {
            vanished += 1;
            EquationStatus::Vanished
        } else if covered == 0 {
            residual.push(e);
            EquationStatus::Residual
        } else {
            EquationStatus::Mixed
        };
        statuses.push(status);
    }
    Ok(Classification {
        statuses,
        vanished,
        residual,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Every zeroed variable must be matched by a vanished equation.
    pub pure_dim: bool,
    /// Only full covers (every monomial annihilated).
    pub covers_only: bool,
    pub max_size: Option<usize>,
    pub dedupe: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            pure_dim: false,
            covers_only: false,
            max_size: None,
            dedupe: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Search nodes visited.
    pub nodes: u64,
    /// Branches cut by a size bound or a mixed equation.
    pub pruned: u64,
}

impl std::ops::AddAssign for EnumerationStats {
    fn add_assign(&mut self, rhs: Self) {
        self.nodes += rhs.nodes;
        self.pruned += rhs.pruned;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub selections: Vec<Selection>,
    pub stats: EnumerationStats,
}

/// Rows ordered by ascending number of ones; ties keep matrix order.
fn greedy_row_order(m: &IncidenceMatrix) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m.num_rows()).collect();
    order.sort_by_key(|&r| m.rows()[r].support().len());
    order
}

/// All selections that annihilate every monomial, by recursive row expansion.
///
/// Output is in depth-first order with columns tried in ascending variable
/// index. With `dedupe`, later copies of a set already emitted are dropped.
pub fn enumerate_covers(m: &IncidenceMatrix, opts: &EnumerationOptions) -> Vec<Selection> {
    enumerate_covers_with_stats(m, opts).selections
}

pub fn enumerate_covers_with_stats(m: &IncidenceMatrix, opts: &EnumerationOptions) -> Enumeration {
    let neq = m.term_rows().len();
    let mut bound = opts.max_size.unwrap_or(usize::MAX);
    if opts.pure_dim {
        bound = bound.min(neq);
    }
    let ctx = CoverSearch {
        m,
        order: greedy_row_order(m),
        bound,
        exact: opts.pure_dim.then_some(neq),
    };

    let mut stats = EnumerationStats::default();
    let mut selections = Vec::new();
    if ctx.order.is_empty() {
        stats.nodes = 1;
        if ctx.exact.unwrap_or(0) == 0 {
            selections.push(Selection::empty());
        }
    } else {
        // The first row is never covered by the empty selection, so its
        // columns split the tree into independent subtrees.
        stats.nodes = 1;
        let first = ctx.order[0];
        let children: Vec<usize> = m.rows()[first].support().iter().collect();
        let parts: Vec<(Vec<Selection>, EnumerationStats)> = children
            .par_iter()
            .map(|&k| {
                let mut st = CoverState {
                    picked: vec![k],
                    set: VarSet::from_indices(m.num_vars(), [k]),
                    out: Vec::new(),
                    stats: EnumerationStats::default(),
                };
                if ctx.bound == 0 {
                    st.stats.pruned += 1;
                } else {
                    ctx.advance(0, &mut st);
                }
                (st.out, st.stats)
            })
            .collect();
        for (sels, st) in parts {
            selections.extend(sels);
            stats += st;
        }
    }
    if opts.dedupe {
        let mut seen = HashSet::new();
        selections.retain(|s| seen.insert(s.clone()));
    }
    Enumeration { selections, stats }
}

struct CoverSearch<'a> {
    m: &'a IncidenceMatrix,
    order: Vec<usize>,
    bound: usize,
    exact: Option<usize>,
}

struct CoverState {
    picked: Vec<usize>,
    set: VarSet,
    out: Vec<Selection>,
    stats: EnumerationStats,
}

impl CoverSearch<'_> {
    fn emit(&self, st: &mut CoverState) {
        if self.exact.is_none_or(|n| st.picked.len() == n) {
            st.out.push(Selection::new(st.picked.iter().copied()));
        }
    }

    /// Row `pos` is covered; emit at the last row or go to the next.
    fn advance(&self, pos: usize, st: &mut CoverState) {
        if pos + 1 == self.order.len() {
            self.emit(st);
        } else {
            self.visit(pos + 1, st);
        }
    }

    fn visit(&self, pos: usize, st: &mut CoverState) {
        st.stats.nodes += 1;
        let row = self.order[pos];
        if self.m.row_covered_by(row, &st.set) {
            self.advance(pos, st);
            return;
        }
        for k in self.m.rows()[row].support().iter() {
            if st.picked.len() + 1 > self.bound {
                st.stats.pruned += 1;
                continue;
            }
            st.picked.push(k);
            st.set.insert(k);
            self.advance(pos, st);
            st.set.remove(k);
            st.picked.pop();
        }
    }
}

/// All selections under which no equation is mixed, sorted by size and then
/// lexicographically. Includes the empty selection (the toric part).
///
/// Only variables with at least one incidence entry are ever selected.
/// With `pure_dim`, the number of zeroed variables equals the number of
/// vanished equations.
pub fn enumerate_consistent(
    sys: &PolynomialSystem,
    m: &IncidenceMatrix,
    opts: &EnumerationOptions,
) -> Result<Vec<Selection>> {
    Ok(enumerate_consistent_with_stats(sys, m, opts)?.selections)
}

/// Depth at which the consistent search hands subtrees to the thread pool.
const SPLIT_DEPTH: usize = 10;

pub fn enumerate_consistent_with_stats(
    sys: &PolynomialSystem,
    m: &IncidenceMatrix,
    opts: &EnumerationOptions,
) -> Result<Enumeration> {
    sys.require_binomial()?;
    if opts.covers_only {
        let mut e = enumerate_covers_with_stats(m, opts);
        e.selections.sort_by(Selection::canonical_cmp);
        e.selections.dedup();
        return Ok(e);
    }
    let search = ConsistentSearch::new(m, opts);
    let mut root = search.initial_state();
    let mut stats = EnumerationStats::default();
    let mut selections = Vec::new();

    if root.mixed == 0 {
        let split = SPLIT_DEPTH.min(search.var_order.len());
        let mut prefixes = Vec::new();
        search.collect_prefixes(&mut root, 0, split, &mut Vec::new(), &mut prefixes, &mut stats);
        let parts: Vec<(Vec<Selection>, EnumerationStats)> = prefixes
            .par_iter()
            .map(|prefix| {
                let mut st = search.initial_state();
                for (i, &choice) in prefix.iter().enumerate() {
                    search.decide(&mut st, search.var_order[i], choice);
                }
                let mut out = Vec::new();
                let mut stats = EnumerationStats::default();
                search.dfs(&mut st, split, &mut out, &mut stats);
                (out, stats)
            })
            .collect();
        for (sels, st) in parts {
            selections.extend(sels);
            stats += st;
        }
    } else {
        stats.nodes = 1;
        stats.pruned = 1;
    }
    selections.sort_by(Selection::canonical_cmp);
    selections.dedup();
    Ok(Enumeration { selections, stats })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowState {
    Open,
    Covered,
    Uncovered,
}

struct ConsistentSearch<'a> {
    m: &'a IncidenceMatrix,
    var_order: Vec<usize>,
    rows_of_var: Vec<Vec<usize>>,
    eqs_of_row: Vec<Vec<usize>>,
    row_pop: Vec<u32>,
    pure_dim: bool,
    max_size: usize,
}

#[derive(Clone)]
struct SearchState {
    selected: Vec<usize>,
    in_count: Vec<u32>,
    out_count: Vec<u32>,
    eq_status: Vec<Option<EquationStatus>>,
    vanished: usize,
    residual: usize,
    mixed: usize,
}

/// Undo record for one decision.
struct Trail {
    eqs: Vec<(usize, Option<EquationStatus>)>,
}

impl<'a> ConsistentSearch<'a> {
    fn new(m: &'a IncidenceMatrix, opts: &EnumerationOptions) -> Self {
        let n = m.num_vars();
        let mut var_order = Vec::new();
        let mut seen = vec![false; n];
        for r in greedy_row_order(m) {
            for k in m.rows()[r].support().iter() {
                if !seen[k] {
                    seen[k] = true;
                    var_order.push(k);
                }
            }
        }
        let mut rows_of_var = vec![Vec::new(); n];
        for (r, row) in m.rows().iter().enumerate() {
            for k in row.support().iter() {
                rows_of_var[k].push(r);
            }
        }
        let mut eqs_of_row = vec![Vec::new(); m.num_rows()];
        for (e, rows) in m.term_rows().iter().enumerate() {
            for &r in rows {
                if !eqs_of_row[r].contains(&e) {
                    eqs_of_row[r].push(e);
                }
            }
        }
        let row_pop = m.rows().iter().map(|r| r.support().len() as u32).collect();
        Self {
            m,
            var_order,
            rows_of_var,
            eqs_of_row,
            row_pop,
            pure_dim: opts.pure_dim,
            max_size: opts.max_size.unwrap_or(usize::MAX),
        }
    }

    fn row_state(&self, st: &SearchState, r: usize) -> RowState {
        if st.in_count[r] > 0 {
            RowState::Covered
        } else if st.out_count[r] == self.row_pop[r] {
            RowState::Uncovered
        } else {
            RowState::Open
        }
    }

    fn eq_state(&self, st: &SearchState, e: usize) -> Option<EquationStatus> {
        let mut covered = 0;
        let mut uncovered = 0;
        let rows = &self.m.term_rows()[e];
        for &r in rows {
            match self.row_state(st, r) {
                RowState::Covered => covered += 1,
                RowState::Uncovered => uncovered += 1,
                RowState::Open => {}
            }
        }
        if covered > 0 && uncovered > 0 {
            Some(EquationStatus::Mixed)
        } else if covered == rows.len() {
            Some(EquationStatus::Vanished)
        } else if uncovered == rows.len() {
            Some(EquationStatus::Residual)
        } else {
            None
        }
    }

    fn set_eq(&self, st: &mut SearchState, e: usize, status: Option<EquationStatus>) {
        match st.eq_status[e] {
            Some(EquationStatus::Vanished) => st.vanished -= 1,
            Some(EquationStatus::Residual) => st.residual -= 1,
            Some(EquationStatus::Mixed) => st.mixed -= 1,
            None => {}
        }
        match status {
            Some(EquationStatus::Vanished) => st.vanished += 1,
            Some(EquationStatus::Residual) => st.residual += 1,
            Some(EquationStatus::Mixed) => st.mixed += 1,
            None => {}
        }
        st.eq_status[e] = status;
    }

    fn initial_state(&self) -> SearchState {
        let neq = self.m.term_rows().len();
        let mut st = SearchState {
            selected: Vec::new(),
            in_count: vec![0; self.m.num_rows()],
            out_count: vec![0; self.m.num_rows()],
            eq_status: vec![None; neq],
            vanished: 0,
            residual: 0,
            mixed: 0,
        };
        for e in 0..neq {
            let s = self.eq_state(&st, e);
            self.set_eq(&mut st, e, s);
        }
        st
    }

    fn decide(&self, st: &mut SearchState, var: usize, zero: bool) -> Trail {
        let mut trail = Trail { eqs: Vec::new() };
        if zero {
            st.selected.push(var);
        }
        for &r in &self.rows_of_var[var] {
            if zero {
                st.in_count[r] += 1;
            } else {
                st.out_count[r] += 1;
            }
            for &e in &self.eqs_of_row[r] {
                let new = self.eq_state(st, e);
                if new != st.eq_status[e] {
                    trail.eqs.push((e, st.eq_status[e]));
                    self.set_eq(st, e, new);
                }
            }
        }
        trail
    }

    fn undo(&self, st: &mut SearchState, var: usize, zero: bool, trail: Trail) {
        for (e, old) in trail.eqs.into_iter().rev() {
            self.set_eq(st, e, old);
        }
        for &r in &self.rows_of_var[var] {
            if zero {
                st.in_count[r] -= 1;
            } else {
                st.out_count[r] -= 1;
            }
        }
        if zero {
            st.selected.pop();
        }
    }

    /// Whether the subtree below this state can still produce output.
    fn viable(&self, st: &SearchState, depth: usize) -> bool {
        if st.mixed > 0 || st.selected.len() > self.max_size {
            return false;
        }
        if self.pure_dim {
            let open = st.eq_status.len() - st.vanished - st.residual;
            let remaining = self.var_order.len() - depth;
            if st.selected.len() > st.vanished + open || st.vanished > st.selected.len() + remaining {
                return false;
            }
        }
        true
    }

    fn dfs(&self, st: &mut SearchState, depth: usize, out: &mut Vec<Selection>, stats: &mut EnumerationStats) {
        stats.nodes += 1;
        if depth == self.var_order.len() {
            if !self.pure_dim || st.selected.len() == st.vanished {
                out.push(Selection::new(st.selected.iter().copied()));
            }
            return;
        }
        let var = self.var_order[depth];
        for zero in [false, true] {
            let trail = self.decide(st, var, zero);
            if self.viable(st, depth + 1) {
                self.dfs(st, depth + 1, out, stats);
            } else {
                stats.pruned += 1;
            }
            self.undo(st, var, zero, trail);
        }
    }

    fn collect_prefixes(
        &self,
        st: &mut SearchState,
        depth: usize,
        split: usize,
        prefix: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
        stats: &mut EnumerationStats,
    ) {
        if depth == split {
            out.push(prefix.clone());
            return;
        }
        stats.nodes += 1;
        let var = self.var_order[depth];
        for zero in [false, true] {
            let trail = self.decide(st, var, zero);
            if self.viable(st, depth + 1) {
                prefix.push(zero);
                self.collect_prefixes(st, depth + 1, split, prefix, out, stats);
                prefix.pop();
            } else {
                stats.pruned += 1;
            }
            self.undo(st, var, zero, trail);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{build_incidence, vanishes};
    use crate::poly::{adjacent_minors, parse_system};

    fn sel(sys: &PolynomialSystem, names: &[&str]) -> Selection {
        Selection::new(names.iter().map(|n| sys.vars().position(n).unwrap()))
    }

    fn names(sys: &PolynomialSystem, sels: &[Selection]) -> Vec<Vec<String>> {
        sels.iter()
            .map(|s| s.names(sys.vars()).into_iter().map(String::from).collect())
            .collect()
    }

    /// Consistent selections by checking every subset of the variables that
    /// carry at least one incidence entry.
    fn brute_force_consistent(sys: &PolynomialSystem, pure_dim: bool) -> Vec<Selection> {
        let m = build_incidence(sys);
        let active: Vec<usize> = m
            .cols()
            .iter()
            .copied()
            .filter(|&k| (0..m.num_rows()).any(|r| m.get(r, k)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << active.len()) {
            let s = Selection::new(
                active
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &k)| k),
            );
            let c = classify(sys, &m, &s).unwrap();
            if !c.has_mixed() && (!pure_dim || s.len() == c.vanished) {
                out.push(s);
            }
        }
        out.sort_by(Selection::canonical_cmp);
        out
    }

    #[test]
    fn classify_examples() {
        let sys = adjacent_minors(2, 3).unwrap();
        let m = build_incidence(&sys);
        use EquationStatus::*;
        let c = classify(&sys, &m, &sel(&sys, &["x12", "x22"])).unwrap();
        assert_eq!(c.statuses, vec![Vanished, Vanished]);
        assert_eq!(c.vanished, 2);
        let c = classify(&sys, &m, &Selection::empty()).unwrap();
        assert_eq!(c.statuses, vec![Residual, Residual]);
        assert_eq!(c.residual, vec![0, 1]);
        let c = classify(&sys, &m, &sel(&sys, &["x11"])).unwrap();
        assert_eq!(c.statuses, vec![Mixed, Residual]);
        assert!(c.has_mixed());
    }

    #[test]
    fn covers_of_two_by_three() {
        let sys = adjacent_minors(2, 3).unwrap();
        let m = build_incidence(&sys);
        let covers = enumerate_covers(&m, &EnumerationOptions::default());
        assert_eq!(covers.len(), 9);
        let got = names(&sys, &covers);
        let expect: Vec<Vec<&str>> = vec![
            vec!["x11", "x12", "x13"],
            vec!["x11", "x12", "x22"],
            vec!["x11", "x12", "x13", "x21"],
            vec!["x11", "x12", "x21", "x22"],
            vec!["x11", "x13", "x21", "x23"],
            vec!["x11", "x21", "x22", "x23"],
            vec!["x12", "x22"],
            vec!["x12", "x21", "x22"],
            vec!["x21", "x22", "x23"],
        ];
        assert_eq!(got, expect);
        for s in &covers {
            assert!(vanishes(&sys, &m, s).unwrap());
        }
    }

    #[test]
    fn covers_with_size_bound() {
        let sys = adjacent_minors(2, 3).unwrap();
        let m = build_incidence(&sys);
        let opts = EnumerationOptions {
            max_size: Some(2),
            ..Default::default()
        };
        assert_eq!(enumerate_covers(&m, &opts), vec![sel(&sys, &["x12", "x22"])]);
        let opts = EnumerationOptions {
            max_size: Some(0),
            ..Default::default()
        };
        assert!(enumerate_covers(&m, &opts).is_empty());
    }

    #[test]
    fn covers_of_single_binomial() {
        let sys = parse_system("x - y;").unwrap();
        let m = build_incidence(&sys);
        let covers = enumerate_covers(&m, &EnumerationOptions::default());
        assert_eq!(names(&sys, &covers), vec![vec!["x", "y"]]);
    }

    #[test]
    fn constant_row_has_no_cover() {
        let sys = parse_system("x - 1;").unwrap();
        let m = build_incidence(&sys);
        assert!(enumerate_covers(&m, &EnumerationOptions::default()).is_empty());
    }

    #[test]
    fn dedupe_merges_repeated_sets() {
        // {a, b} is reached from the first row through a and through b
        let sys = parse_system("a*b - b*c; a*c - a*b;").unwrap();
        let m = build_incidence(&sys);
        let raw = enumerate_covers(
            &m,
            &EnumerationOptions {
                dedupe: false,
                ..Default::default()
            },
        );
        let deduped = enumerate_covers(&m, &EnumerationOptions::default());
        let unique: HashSet<_> = raw.iter().cloned().collect();
        assert!(raw.len() > deduped.len());
        assert_eq!(unique.len(), deduped.len());
    }

    #[test]
    fn pure_covers_match_equation_count() {
        let sys = adjacent_minors(2, 3).unwrap();
        let m = build_incidence(&sys);
        let opts = EnumerationOptions {
            pure_dim: true,
            ..Default::default()
        };
        assert_eq!(enumerate_covers(&m, &opts), vec![sel(&sys, &["x12", "x22"])]);
    }

    #[test]
    fn consistent_two_by_three_pure() {
        let sys = adjacent_minors(2, 3).unwrap();
        let m = build_incidence(&sys);
        let opts = EnumerationOptions {
            pure_dim: true,
            ..Default::default()
        };
        let got = enumerate_consistent(&sys, &m, &opts).unwrap();
        assert_eq!(got, vec![Selection::empty(), sel(&sys, &["x12", "x22"])]);
        assert_eq!(got, brute_force_consistent(&sys, true));
    }

    #[test]
    fn consistent_two_by_four_pure() {
        let sys = adjacent_minors(2, 4).unwrap();
        let m = build_incidence(&sys);
        let opts = EnumerationOptions {
            pure_dim: true,
            ..Default::default()
        };
        let got = enumerate_consistent(&sys, &m, &opts).unwrap();
        assert_eq!(
            got,
            vec![
                Selection::empty(),
                sel(&sys, &["x12", "x22"]),
                sel(&sys, &["x13", "x23"]),
            ]
        );
        assert_eq!(got, brute_force_consistent(&sys, true));
    }

    #[test]
    fn consistent_without_restriction_matches_brute_force() {
        for n in 3..=5 {
            let sys = adjacent_minors(2, n).unwrap();
            let m = build_incidence(&sys);
            let got = enumerate_consistent(&sys, &m, &EnumerationOptions::default()).unwrap();
            assert_eq!(got, brute_force_consistent(&sys, false), "n = {n}");
        }
    }

    #[test]
    fn fibonacci_counts_small() {
        let mut fib = (1u64, 2u64);
        for n in 3..=10 {
            let sys = adjacent_minors(2, n).unwrap();
            let m = build_incidence(&sys);
            let opts = EnumerationOptions {
                pure_dim: true,
                ..Default::default()
            };
            let got = enumerate_consistent(&sys, &m, &opts).unwrap();
            assert_eq!(got.len() as u64, fib.1, "n = {n}");
            fib = (fib.1, fib.0 + fib.1);
        }
    }

    #[test]
    fn consistent_rejects_non_binomial() {
        let sys = parse_system("x*y;").unwrap();
        let m = build_incidence(&sys);
        assert!(enumerate_consistent(&sys, &m, &EnumerationOptions::default()).is_err());
    }

    #[test]
    fn consistent_covers_only_mode() {
        let sys = adjacent_minors(2, 3).unwrap();
        let m = build_incidence(&sys);
        let opts = EnumerationOptions {
            covers_only: true,
            max_size: Some(2),
            ..Default::default()
        };
        let got = enumerate_consistent(&sys, &m, &opts).unwrap();
        assert_eq!(got, vec![sel(&sys, &["x12", "x22"])]);
    }

    #[test]
    fn empty_selection_always_present_under_pure_dim() {
        for text in ["x - y;", "x*y - z*w; z - 1;", "x^2 - y^3; y*z - 2*x;"] {
            let sys = parse_system(text).unwrap();
            let m = build_incidence(&sys);
            let opts = EnumerationOptions {
                pure_dim: true,
                ..Default::default()
            };
            let got = enumerate_consistent(&sys, &m, &opts).unwrap();
            assert_eq!(got.first(), Some(&Selection::empty()), "{text}");
        }
    }
}
