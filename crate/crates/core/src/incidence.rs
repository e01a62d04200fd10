//! The 0/1 incidence matrix between the distinct monomials of a system and
//! its variables.

use std::collections::HashMap;

use crate::bitset::VarSet;
use crate::enumerate::Selection;
use crate::error::{Error, Result};
use crate::poly::{PolynomialSystem, VariableTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceRow {
    pub exponents: Vec<i64>,
    /// `(equation, term)` positions where this monomial occurs.
    pub origins: Vec<(usize, usize)>,
    bits: VarSet,
}

impl IncidenceRow {
    pub fn support(&self) -> &VarSet {
        &self.bits
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    nvars: usize,
    rows: Vec<IncidenceRow>,
    cols: Vec<usize>,
    dropped: Vec<usize>,
    dropped_set: VarSet,
    term_rows: Vec<Vec<usize>>,
}

/// One row per distinct monomial, in order of first occurrence. Variables
/// with a negative exponent anywhere get no column.
pub fn build_incidence(sys: &PolynomialSystem) -> IncidenceMatrix {
    let n = sys.num_vars();
    let mut dropped_set = VarSet::with_capacity(n);
    for t in sys.equations().iter().flatten() {
        for (k, &e) in t.exponents.iter().enumerate() {
            if e < 0 {
                dropped_set.insert(k);
            }
        }
    }
    let mut rows: Vec<IncidenceRow> = Vec::new();
    let mut seen: HashMap<&[i64], usize> = HashMap::new();
    let mut term_rows = Vec::with_capacity(sys.num_equations());
    for (e, eq) in sys.equations().iter().enumerate() {
        let mut tr = Vec::with_capacity(eq.len());
        for (t, term) in eq.iter().enumerate() {
            let r = *seen.entry(term.exponents.as_slice()).or_insert_with(|| {
                let bits = VarSet::from_indices(
                    n,
                    term.exponents
                        .iter()
                        .enumerate()
                        .filter(|&(k, &a)| a > 0 && !dropped_set.contains(k))
                        .map(|(k, _)| k),
                );
                rows.push(IncidenceRow {
                    exponents: term.exponents.clone(),
                    origins: Vec::new(),
                    bits,
                });
                rows.len() - 1
            });
            rows[r].origins.push((e, t));
            tr.push(r);
        }
        term_rows.push(tr);
    }
    let cols = (0..n).filter(|&k| !dropped_set.contains(k)).collect();
    let dropped = dropped_set.iter().collect();
    IncidenceMatrix {
        nvars: n,
        rows,
        cols,
        dropped,
        dropped_set,
        term_rows,
    }
}

impl IncidenceMatrix {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[IncidenceRow] {
        &self.rows
    }

    /// Variable indices that have a column, ascending.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn dropped(&self) -> &[usize] {
        &self.dropped
    }

    pub fn is_dropped(&self, var: usize) -> bool {
        self.dropped_set.contains(var)
    }

    /// Entry for the row and a variable index (not a column position).
    pub fn get(&self, row: usize, var: usize) -> bool {
        self.rows[row].bits.contains(var)
    }

    /// Row index of term `term` of equation `equation`.
    pub fn term_row(&self, equation: usize, term: usize) -> usize {
        self.term_rows[equation][term]
    }

    pub fn term_rows(&self) -> &[Vec<usize>] {
        &self.term_rows
    }

    pub fn check_selection(&self, sel: &Selection) -> Result<()> {
        for &k in sel.members() {
            if k >= self.nvars {
                return Err(Error::UnknownVariable(k));
            }
        }
        Ok(())
    }

    pub(crate) fn check_selection_active(&self, sel: &Selection, vars: &VariableTable) -> Result<()> {
        self.check_selection(sel)?;
        match sel.members().iter().find(|&&k| self.is_dropped(k)) {
            Some(&k) => Err(Error::DroppedVariable(vars.name(k).to_string())),
            None => Ok(()),
        }
    }

    pub(crate) fn row_covered_by(&self, row: usize, set: &VarSet) -> bool {
        self.rows[row].bits.intersects(set)
    }

    /// Tabular rendering: monomial labels down the side, variable names on top.
    pub fn render(&self, sys: &PolynomialSystem) -> String {
        let vars = sys.vars();
        let labels: Vec<String> = self
            .rows
            .iter()
            .map(|r| sys.monomial_label(&r.exponents))
            .collect();
        let lw = labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = self.cols.iter().map(|&k| vars.name(k).len().max(1)).collect();
        let mut out = format!("{:lw$} |", "");
        for (&k, w) in self.cols.iter().zip(&widths) {
            out.push_str(&format!(" {:>w$}", vars.name(k)));
        }
        out.push('\n');
        for (r, label) in labels.iter().enumerate() {
            out.push_str(&format!("{label:lw$} |"));
            for (&k, w) in self.cols.iter().zip(&widths) {
                let bit = if self.get(r, k) { 1 } else { 0 };
                out.push_str(&format!(" {bit:>w$}"));
            }
            out.push('\n');
        }
        if !self.dropped.is_empty() {
            let names: Vec<&str> = self.dropped.iter().map(|&k| vars.name(k)).collect();
            out.push_str(&format!("dropped: {}\n", names.join(" ")));
        }
        out
    }
}

/// Whether some member of `sel` has a 1 in `row`.
pub fn row_covered(m: &IncidenceMatrix, row: usize, sel: &Selection) -> Result<bool> {
    if row >= m.num_rows() {
        return Err(Error::RowOutOfRange {
            row,
            rows: m.num_rows(),
        });
    }
    m.check_selection(sel)?;
    Ok(sel.members().iter().any(|&k| m.get(row, k)))
}

/// Whether zeroing `sel` annihilates every monomial of the system.
pub fn vanishes(sys: &PolynomialSystem, m: &IncidenceMatrix, sel: &Selection) -> Result<bool> {
    m.check_selection_active(sel, sys.vars())?;
    let set = sel.to_varset(m.num_vars());
    Ok((0..m.num_rows()).all(|r| m.row_covered_by(r, &set)))
}
