//! Invariants of braid closures: components, linking numbers, Euler
//! characteristic of the Bennequin surface and the Alexander polynomial
//! from the reduced Burau representation.
//!
//! Matching invariants are a necessary condition for two closures to be the
//! same link, never a proof.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Closure components as cycles of the braid permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub strands: usize,
    /// Each cycle starts at its least top position; cycles are sorted by it.
    pub cycles: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Component ids: the least top position of each component.
    pub fn ids(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c[0]).collect()
    }

    /// Index (into `cycles`) of the component through top position `pos`.
    pub fn index_of(&self, pos: usize) -> usize {
        self.cycles
            .iter()
            .position(|c| c.contains(&pos))
            .expect("every position lies on a cycle")
    }

    /// Id of the component through top position `pos`.
    pub fn id_of(&self, pos: usize) -> usize {
        self.cycles[self.index_of(pos)][0]
    }

    /// Number of strands each component occupies, in component order.
    pub fn strand_counts(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len()).collect()
    }

    fn lookup(&self) -> Vec<usize> {
        let mut comp = vec![0; self.strands];
        for (ci, cycle) in self.cycles.iter().enumerate() {
            for &p in cycle {
                comp[p - 1] = ci;
            }
        }
        comp
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingMatrix {
    pub ids: Vec<usize>,
    /// Symmetric, zero diagonal.
    pub entries: Vec<Vec<i64>>,
    /// Unsigned crossing counts between components; the diagonal holds
    /// crossings of a component with itself.
    pub crossings: Vec<Vec<usize>>,
}

impl LinkingMatrix {
    pub fn get(&self, id_a: usize, id_b: usize) -> Option<i64> {
        let a = self.ids.iter().position(|&i| i == id_a)?;
        let b = self.ids.iter().position(|&i| i == id_b)?;
        Some(self.entries[a][b])
    }

    /// Off-diagonal values `lk(i, j)` for `i < j`, sorted.
    pub fn multiset(&self) -> Vec<i64> {
        let n = self.ids.len();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.entries[i][j]);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn min_off_diagonal(&self) -> Option<i64> {
        self.multiset().into_iter().min()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub component_count: usize,
    pub euler_char: i64,
    pub linking_multiset: Vec<i64>,
    pub alexander: LaurentPoly,
}

pub fn closure_components(w: &BraidWord) -> ComponentPartition {
    ComponentPartition {
        strands: w.strands(),
        cycles: w.permutation().cycles(),
    }
}

pub fn linking_matrix(w: &BraidWord) -> Result<LinkingMatrix> {
    let parts = closure_components(w);
    let comp = parts.lookup();
    let m = parts.count();
    let mut raw = vec![vec![0i64; m]; m];
    let mut crossings = vec![vec![0usize; m]; m];
    // occupant[pos] = top position (0-based) of the strand now at `pos`.
    let mut occupant: Vec<usize> = (0..w.strands()).collect();
    for &g in w.letters() {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (comp[occupant[i]], comp[occupant[i + 1]]);
        crossings[a][b] += 1;
        if a != b {
            crossings[b][a] += 1;
            let s = i64::from(g.signum());
            raw[a][b] += s;
            raw[b][a] += s;
        }
        occupant.swap(i, i + 1);
    }
    let mut entries = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            if raw[i][j] % 2 != 0 {
                return Err(Error::Invariant(format!(
                    "odd signed crossing count {} between components {} and {}",
                    raw[i][j], parts.cycles[i][0], parts.cycles[j][0]
                )));
            }
            entries[i][j] = raw[i][j] / 2;
        }
    }
    Ok(LinkingMatrix {
        ids: parts.ids(),
        entries,
        crossings,
    })
}

/// `χ = strands − letters` of the Bennequin surface of a positive braid.
pub fn euler_characteristic(w: &BraidWord) -> Result<i64> {
    w.require_positive()?;
    Ok(w.strands() as i64 - w.len() as i64)
}

/// Reduced Burau matrix `ρ(w)`, size `(n − 1) × (n − 1)`.
pub fn reduced_burau(w: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let dim = w.strands() - 1;
    let mut m: Vec<Vec<LaurentPoly>> = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    if r == c {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    let t = LaurentPoly::monomial(1, 1);
    let minus_t = LaurentPoly::monomial(-1, 1);
    let t_inv = LaurentPoly::monomial(1, -1);
    let minus_t_inv = LaurentPoly::monomial(-1, -1);
    let one = LaurentPoly::one();
    for &g in w.letters() {
        // Right multiplication by the generator matrix only rewrites the
        // column of index i − 1 (0-based), from columns i − 2, i − 1, i:
        //   σᵢ:   t·c₋ − t·c + c₊
        //   σᵢ⁻¹: c₋ − t⁻¹·c + t⁻¹·c₊
        let i = g.unsigned_abs() as usize;
        let col = i - 1;
        let (left_w, mid_w, right_w) = if g > 0 {
            (&t, &minus_t, &one)
        } else {
            (&one, &minus_t_inv, &t_inv)
        };
        for row in m.iter_mut() {
            let mut v = &row[col] * mid_w;
            if col >= 1 {
                v = &v + &(&row[col - 1] * left_w);
            }
            if col + 1 < dim {
                v = &v + &(&row[col + 1] * right_w);
            }
            row[col] = v;
        }
    }
    m
}

/// Fraction-free (Bareiss) determinant over `Z[t, t⁻¹]`.
pub fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // Smallest nonzero pivot keeps intermediate degrees down.
        let pivot = (k..n)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| span(&m[r][k]));
        let Some(p) = pivot else {
            return Ok(LaurentPoly::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

fn span(p: &LaurentPoly) -> i64 {
    p.highest_exponent().unwrap_or(0) - p.lowest_exponent().unwrap_or(0)
}

/// Normalized one-variable Alexander polynomial of the closure:
/// `det(ρ(w) − I) · (t − 1) / (tⁿ − 1)`.
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.strands();
    let mut m = reduced_burau(w);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPoly::one();
    }
    let det = determinant(m)?;
    let t_minus_one = LaurentPoly::from_terms([(1, 1), (0, -1)]);
    let cyclotomic = LaurentPoly::from_terms([(n as i64, 1), (0, -1)]);
    let poly = (&det * &t_minus_one).div_exact(&cyclotomic)?;
    Ok(poly.normalized())
}

pub fn invariant_bundle(w: &BraidWord) -> Result<InvariantBundle> {
    let euler_char = euler_characteristic(w)?;
    let lk = linking_matrix(w)?;
    Ok(InvariantBundle {
        component_count: lk.ids.len(),
        euler_char,
        linking_multiset: lk.multiset(),
        alexander: alexander_polynomial(w)?,
    })
}

/// Field-wise equality; linking values are compared as multisets.
pub fn bundles_match(a: &InvariantBundle, b: &InvariantBundle) -> bool {
    let mut la = a.linking_multiset.clone();
    let mut lb = b.linking_multiset.clone();
    la.sort_unstable();
    lb.sort_unstable();
    a.component_count == b.component_count
        && a.euler_char == b.euler_char
        && la == lb
        && a.alexander == b.alexander
}

/// Evidence that a closure is non-split: any link whose components all
/// link pairwise with nonzero linking number cannot be split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NonsplitCertificate {
    Knot,
    Certified {
        min_linking: i64,
    },
    /// A pair of component ids with linking number `linking < 1`.
    Uncertified {
        pair: (usize, usize),
        linking: i64,
    },
}

impl NonsplitCertificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, NonsplitCertificate::Uncertified { .. })
    }
}

/// Certifies non-splitness when every pair of components has positive
/// linking number.
pub fn nonsplit_certificate(w: &BraidWord) -> Result<NonsplitCertificate> {
    let lk = linking_matrix(w)?;
    let n = lk.ids.len();
    if n < 2 {
        return Ok(NonsplitCertificate::Knot);
    }
    let mut min = i64::MAX;
    for i in 0..n {
        for j in i + 1..n {
            let v = lk.entries[i][j];
            if v < 1 {
                return Ok(NonsplitCertificate::Uncertified {
                    pair: (lk.ids[i], lk.ids[j]),
                    linking: v,
                });
            }
            min = min.min(v);
        }
    }
    Ok(NonsplitCertificate::Certified { min_linking: min })
}

/// Upper bound on the number of full twists in any positive braid
/// representative: `r` full twists on a representative put every pair of
/// components at linking number at least `r`. `None` for knots.
pub fn full_twist_bound(lk: &LinkingMatrix) -> Option<i64> {
    lk.min_off_diagonal().map(|m| m.max(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::full_twist;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn components() {
        let t = BraidWord::run(7, 1, 6, 3)
            .unwrap()
            .concat(&w(7, &[1, 2]))
            .unwrap();
        assert_eq!(closure_components(&t).count(), 3);
        let t = BraidWord::run(5, 1, 4, 2)
            .unwrap()
            .concat(&w(5, &[1, 2]))
            .unwrap();
        assert_eq!(closure_components(&t).count(), 3);
        let parts = closure_components(&BraidWord::identity(4));
        assert_eq!(parts.count(), 4);
        assert_eq!(parts.ids(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn hopf_and_torus_linking() {
        let lk = linking_matrix(&w(2, &[1, 1])).unwrap();
        assert_eq!(lk.multiset(), vec![1]);
        assert_eq!(lk.get(1, 2), Some(1));
        let lk = linking_matrix(&full_twist(3, 1).unwrap()).unwrap();
        assert_eq!(lk.multiset(), vec![1, 1, 1]);
    }

    #[test]
    fn companion_linking_for_k2() {
        let b = w(3, &[1, 1, 1, 1])
            .concat(&full_twist(3, 1).unwrap())
            .unwrap();
        let lk = linking_matrix(&b).unwrap();
        assert_eq!(lk.get(1, 2), Some(3));
        assert_eq!(lk.get(1, 3), Some(1));
        assert_eq!(lk.get(2, 3), Some(1));
    }

    #[test]
    fn negative_crossings_link_negatively() {
        let lk = linking_matrix(&w(2, &[-1, -1])).unwrap();
        assert_eq!(lk.multiset(), vec![-1]);
        let lk = linking_matrix(&w(2, &[1, -1])).unwrap();
        assert_eq!(lk.multiset(), vec![0]);
    }

    #[test]
    fn crossing_counts_add_up() {
        let b = w(4, &[1, 2, 3, 1, 2, 1, 3, 3, 2]);
        let lk = linking_matrix(&b).unwrap();
        let n = lk.ids.len();
        let mut total = 0;
        for i in 0..n {
            for j in i..n {
                total += lk.crossings[i][j];
            }
        }
        assert_eq!(total, b.len());
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(
            euler_characteristic(&full_twist(3, 1).unwrap()).unwrap(),
            -3
        );
        assert_eq!(euler_characteristic(&w(2, &[1, 1, 1])).unwrap(), -1);
        let t = w(4, &[1, 2, 1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert_eq!(euler_characteristic(&t).unwrap(), -7);
        assert!(euler_characteristic(&w(2, &[-1])).is_err());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(
            alexander_polynomial(&w(2, &[1, 1])).unwrap(),
            p(&[(0, 1), (1, -1)])
        );
        assert_eq!(
            alexander_polynomial(&w(2, &[1, 1, 1])).unwrap(),
            p(&[(2, 1), (1, -1), (0, 1)])
        );
        assert!(alexander_polynomial(&BraidWord::identity(2))
            .unwrap()
            .is_zero());
        assert_eq!(
            alexander_polynomial(&BraidWord::identity(1)).unwrap(),
            LaurentPoly::one()
        );
        // figure eight: σ₁σ₂⁻¹σ₁σ₂⁻¹ gives t² − 3t + 1
        assert_eq!(
            alexander_polynomial(&w(3, &[1, -2, 1, -2])).unwrap(),
            p(&[(2, 1), (1, -3), (0, 1)])
        );
        // unknot as a stabilized braid
        assert_eq!(
            alexander_polynomial(&w(3, &[1, 2])).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn trefoil_from_three_strands() {
        // (σ₁σ₂)² closes to the trefoil as well.
        assert_eq!(
            alexander_polynomial(&w(3, &[1, 2, 1, 2])).unwrap(),
            alexander_polynomial(&w(2, &[1, 1, 1])).unwrap()
        );
    }

    #[test]
    fn nonsplit() {
        assert_eq!(
            nonsplit_certificate(&w(1, &[])).unwrap(),
            NonsplitCertificate::Knot
        );
        assert_eq!(
            nonsplit_certificate(&w(2, &[])).unwrap(),
            NonsplitCertificate::Uncertified {
                pair: (1, 2),
                linking: 0
            }
        );
        let c = nonsplit_certificate(&w(3, &[1, 1, 1, 1, 1, 2, 1, 2, 1, 2])).unwrap();
        assert_eq!(c, NonsplitCertificate::Certified { min_linking: 1 });
        assert!(!nonsplit_certificate(&w(2, &[1, -1]))
            .unwrap()
            .is_certified());
    }

    #[test]
    fn twist_bound() {
        let lk = linking_matrix(&full_twist(3, 2).unwrap()).unwrap();
        assert_eq!(full_twist_bound(&lk), Some(2));
        assert_eq!(
            full_twist_bound(&linking_matrix(&w(2, &[1])).unwrap()),
            None
        );
    }

    #[test]
    fn bundles() {
        let hopf = invariant_bundle(&w(2, &[1, 1])).unwrap();
        assert_eq!(hopf.component_count, 2);
        assert_eq!(hopf.euler_char, 0);
        assert_eq!(hopf.linking_multiset, vec![1]);
        let trefoil = invariant_bundle(&w(2, &[1, 1, 1])).unwrap();
        assert!(bundles_match(&hopf, &hopf));
        assert!(!bundles_match(&hopf, &trefoil));
        let unknot = invariant_bundle(&BraidWord::identity(1)).unwrap();
        assert_eq!(unknot.component_count, 1);
        assert_eq!(unknot.euler_char, 1);
        assert!(unknot.linking_multiset.is_empty());
        assert_eq!(unknot.alexander, LaurentPoly::one());
        let twist = invariant_bundle(&full_twist(3, 1).unwrap()).unwrap();
        assert_eq!((twist.component_count, twist.euler_char), (3, -3));
        assert_eq!(twist.linking_multiset, vec![1, 1, 1]);
    }

    #[test]
    fn determinant_small() {
        // [[t, 1], [1, t]] → t² − 1
        let m = vec![
            vec![p(&[(1, 1)]), p(&[(0, 1)])],
            vec![p(&[(0, 1)]), p(&[(1, 1)])],
        ];
        assert_eq!(determinant(m).unwrap(), p(&[(2, 1), (0, -1)]));
        // needs a row swap
        let m = vec![
            vec![LaurentPoly::zero(), p(&[(0, 1)])],
            vec![p(&[(0, 1)]), LaurentPoly::zero()],
        ];
        assert_eq!(determinant(m).unwrap(), p(&[(0, -1)]));
    }
}
