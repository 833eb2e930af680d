//! Exact linear algebra over `Z[q, q^-1]` for expressing an element of
//! `H^c_r` as a combination of given elements.

use std::collections::BTreeMap;

use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::Perm;
use crate::error::{Error, Result};
use crate::hecke_clifford::{HCElem, Mask};

/// Row echelon form built one row at a time, fraction free.
struct Echelon {
    width: usize,
    pivots: Vec<(usize, Vec<LaurentPoly>)>,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon { width, pivots: Vec::new() }
    }

    fn reduce(&self, mut row: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
        for (pc, prow) in &self.pivots {
            if row[*pc].is_zero() {
                continue;
            }
            if let Some((s, e)) = prow[*pc].as_unit() {
                let f = row[*pc].scale_i64(s).shift(-e);
                for (x, p) in row.iter_mut().zip(prow) {
                    if !p.is_zero() {
                        *x -= &(p * &f);
                    }
                }
            } else {
                let a = prow[*pc].clone();
                let b = row[*pc].clone();
                for (x, p) in row.iter_mut().zip(prow) {
                    let mut v = &*x * &a;
                    if !p.is_zero() {
                        v -= &(p * &b);
                    }
                    *x = v;
                }
            }
        }
        row
    }

    /// Reduce `row` and keep it if it is independent in the first `width`
    /// columns. Returns `Err(())` for a row whose unknown part vanishes but
    /// whose trailing entries do not.
    fn insert(&mut self, row: Vec<LaurentPoly>) -> std::result::Result<bool, ()> {
        let row = self.reduce(row);
        match (0..self.width).find(|&c| !row[c].is_zero()) {
            Some(c) => {
                self.pivots.push((c, row));
                Ok(true)
            }
            None if row[self.width..].iter().all(|x| x.is_zero()) => Ok(false),
            None => Err(()),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

type Key = (Perm, Mask);

fn rows_of(columns: &[&HCElem], target: Option<&HCElem>) -> BTreeMap<Key, Vec<LaurentPoly>> {
    let width = columns.len() + usize::from(target.is_some());
    let mut rows: BTreeMap<Key, Vec<LaurentPoly>> = BTreeMap::new();
    let all = columns.iter().copied().chain(target);
    for (c, e) in all.enumerate() {
        for (w, m, f) in e.terms() {
            rows.entry((*w, m)).or_insert_with(|| vec![LaurentPoly::zero(); width])[c] = f.clone();
        }
    }
    rows
}

/// Rank of the span of `columns` over `Q(q)`.
pub fn rank(columns: &[&HCElem]) -> usize {
    let mut ech = Echelon::new(columns.len());
    for (_, row) in rows_of(columns, None) {
        let _ = ech.insert(row);
        if ech.rank() == columns.len() {
            break;
        }
    }
    ech.rank()
}

/// Coefficients `γ` with `Σ γ_i columns[i] = target`, all in `Z[q, q^-1]`.
///
/// The columns must be linearly independent. The result is checked by
/// substitution before it is returned.
pub fn solve_combination(columns: &[&HCElem], target: &HCElem) -> Result<Vec<LaurentPoly>> {
    let k = columns.len();
    if target.is_zero() {
        return Ok(vec![LaurentPoly::zero(); k]);
    }
    let mut ech = Echelon::new(k);
    for (key, row) in rows_of(columns, Some(target)) {
        if ech.insert(row).is_err() {
            return Err(Error::Solve(format!(
                "target is not in the span (inconsistent at T{} c{:b})",
                key.0, key.1
            )));
        }
        if ech.rank() == k {
            break;
        }
    }
    if ech.rank() < k {
        return Err(Error::Solve(format!(
            "the {k} spanning elements are linearly dependent (rank {})",
            ech.rank()
        )));
    }
    let mut gamma = vec![LaurentPoly::zero(); k];
    for (pc, row) in ech.pivots.iter().rev() {
        let mut rhs = row[k].clone();
        for c in 0..k {
            if c != *pc && !row[c].is_zero() && !gamma[c].is_zero() {
                rhs -= &(&row[c] * &gamma[c]);
            }
        }
        gamma[*pc] = rhs.div_exact(&row[*pc]).ok_or_else(|| {
            Error::Solve(format!(
                "coefficient is not a Laurent polynomial: ({rhs}) / ({})",
                row[*pc]
            ))
        })?;
    }
    let mut check = target.neg();
    for (e, g) in columns.iter().zip(&gamma) {
        check.add_scaled(e, g);
    }
    if !check.is_zero() {
        return Err(Error::Solve("target is not in the span".into()));
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_known_combination() {
        let a = HCElem::t_simple(3, 1);
        let b = HCElem::t_simple(3, 1).mul_t(2).mul_c(1);
        let c = HCElem::c(3, 2).add(&HCElem::one(3));
        let f = [
            LaurentPoly::from_terms([(2, 1i64), (-1, -3)]),
            LaurentPoly::zero(),
            LaurentPoly::from_terms([(0, 5i64)]),
        ];
        let mut target = HCElem::zero(3);
        for (e, g) in [&a, &b, &c].iter().zip(&f) {
            target.add_scaled(e, g);
        }
        assert_eq!(solve_combination(&[&a, &b, &c], &target).unwrap(), f.to_vec());
    }

    #[test]
    fn detects_dependence_and_inconsistency() {
        let a = HCElem::t_simple(3, 1);
        let b = a.scale(&LaurentPoly::q());
        assert_eq!(rank(&[&a, &b]), 1);
        assert!(solve_combination(&[&a], &HCElem::c(3, 1)).is_err());
    }

    #[test]
    fn non_unit_pivots_divide_exactly() {
        let a = HCElem::t_simple(2, 1).scale(&LaurentPoly::constant(2));
        let b = HCElem::one(2).add(&HCElem::t_simple(2, 1));
        let target = a.scale(&LaurentPoly::q()).add(&b.scale(&LaurentPoly::constant(-1)));
        let g = solve_combination(&[&b, &a], &target).unwrap();
        assert_eq!(g, vec![LaurentPoly::constant(-1), LaurentPoly::q()]);
    }
}
