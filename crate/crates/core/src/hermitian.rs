//! Hermitian polynomial forms `Σ c_{αβ} z^α z̄^β` and their reduction modulo
//! the unit sphere.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::poly::{MultiIndex, Polynomial};
use crate::{ROUNDING, TAU};

/// Sparse Hermitian coefficient matrix indexed by monomial pairs `(α, β)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianForm {
    nvars: usize,
    entries: BTreeMap<(MultiIndex, MultiIndex), Complex64>,
}

/// Location and values of the largest entrywise disagreement between forms.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryDifference {
    pub row: MultiIndex,
    pub col: MultiIndex,
    pub left: Complex64,
    pub right: Complex64,
}

impl EntryDifference {
    pub fn magnitude(&self) -> f64 {
        (self.left - self.right).norm()
    }
}

impl HermitianForm {
    pub fn zero(nvars: usize) -> Self {
        HermitianForm { nvars, entries: BTreeMap::new() }
    }

    /// `‖p‖² = Σ ⟨C_α, C_β⟩ z^α z̄^β` where `C_α` collects the α-coefficients
    /// of all components.
    pub fn squared_norm(nvars: usize, components: &[Polynomial]) -> Self {
        let mut form = HermitianForm::zero(nvars);
        for p in components {
            debug_assert_eq!(p.nvars(), nvars);
            for (a, &ca) in p.stored_terms() {
                for (b, &cb) in p.stored_terms() {
                    form.add_entry(a.clone(), b.clone(), ca * cb.conj());
                }
            }
        }
        form.prune();
        form
    }

    /// The form `‖z‖² − 1`.
    pub fn sphere(nvars: usize) -> Self {
        let mut form = HermitianForm::zero(nvars);
        for j in 0..nvars {
            let e = MultiIndex::unit(nvars, j);
            form.add_entry(e.clone(), e, Complex64::new(1.0, 0.0));
        }
        let o = MultiIndex::zero(nvars);
        form.add_entry(o.clone(), o, Complex64::new(-1.0, 0.0));
        form
    }

    fn add_entry(&mut self, row: MultiIndex, col: MultiIndex, c: Complex64) {
        *self.entries.entry((row, col)).or_insert(Complex64::new(0.0, 0.0)) += c;
    }

    fn prune(&mut self) {
        self.entries.retain(|_, c| c.norm() > ROUNDING);
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|c| c.norm() <= TAU)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, row: &MultiIndex, col: &MultiIndex) -> Complex64 {
        // BTreeMap lookup needs an owned key pair.
        self.entries.get(&(row.clone(), col.clone())).copied().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &MultiIndex, &Complex64)> + '_ {
        self.entries.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn add(&self, other: &HermitianForm) -> HermitianForm {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &HermitianForm) -> HermitianForm {
        self.combine(other, -1.0)
    }

    fn combine(&self, other: &HermitianForm, sign: f64) -> HermitianForm {
        let mut out = self.clone();
        for ((a, b), &c) in &other.entries {
            out.add_entry(a.clone(), b.clone(), c * sign);
        }
        out.prune();
        out
    }

    pub fn scale(&self, s: f64) -> HermitianForm {
        let mut out = HermitianForm::zero(self.nvars);
        for (k, &c) in &self.entries {
            out.entries.insert(k.clone(), c * s);
        }
        out.prune();
        out
    }

    /// Value at `z` by direct summation over the stored entries.
    pub fn evaluate(&self, z: &[Complex64]) -> Complex64 {
        self.entries
            .iter()
            .map(|((a, b), &c)| c * a.eval(z) * b.eval(z).conj())
            .fold(Complex64::new(0.0, 0.0), |x, y| x + y)
    }

    /// Largest deviation from `entry(β,α) = conj(entry(α,β))`.
    pub fn hermitian_defect(&self) -> f64 {
        self.entries
            .iter()
            .map(|((a, b), &c)| (c - self.entry(b, a).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise comparison without pruning: the largest `|self − other|`
    /// entry, or `None` when the two stored entry sets agree exactly.
    pub fn max_difference(&self, other: &HermitianForm) -> Option<EntryDifference> {
        let mut best: Option<EntryDifference> = None;
        let mut consider = |row: &MultiIndex, col: &MultiIndex| {
            let d = EntryDifference {
                row: row.clone(),
                col: col.clone(),
                left: self.entry(row, col),
                right: other.entry(row, col),
            };
            if d.magnitude() > 0.0 && best.as_ref().is_none_or(|b| d.magnitude() > b.magnitude()) {
                best = Some(d);
            }
        };
        for (a, b) in self.entries.keys() {
            consider(a, b);
        }
        for (a, b) in other.entries.keys() {
            consider(a, b);
        }
        best
    }

    /// The monomials appearing as a row or column index, descending order.
    pub fn support(&self) -> Vec<MultiIndex> {
        let mut idx: Vec<MultiIndex> = self
            .entries
            .keys()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        idx.sort();
        idx.dedup();
        idx.reverse();
        idx
    }

    /// Dense coefficient matrix over [`HermitianForm::support`].
    pub fn to_matrix(&self) -> (Vec<MultiIndex>, DMatrix<Complex64>) {
        let support = self.support();
        let pos: BTreeMap<&MultiIndex, usize> =
            support.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = DMatrix::zeros(support.len(), support.len());
        for ((a, b), &c) in &self.entries {
            m[(pos[a], pos[b])] = c;
        }
        (support, m)
    }

    /// Reduces the form modulo `‖z‖² = 1`.
    ///
    /// Entries are grouped by their Fourier shift `ν = α − β`. Writing
    /// `x_j = |z_j|²`, each group contributes the polynomial
    /// `Σ c_{αβ} x^{min(α,β)}` (the common factor `r^{|ν|}` is dropped). The
    /// last variable is eliminated with `x_n = 1 − Σ_{j<n} x_j` and the
    /// remainder is rebuilt as a form. The result agrees with `self` on the
    /// sphere and is zero exactly when `self` vanishes identically there.
    pub fn reduce_mod_sphere(&self) -> HermitianForm {
        let n = self.nvars;
        if n == 0 {
            return self.clone();
        }
        let mut groups: BTreeMap<Vec<i64>, Polynomial> = BTreeMap::new();
        for ((a, b), &c) in &self.entries {
            let shift: Vec<i64> = a
                .exponents()
                .iter()
                .zip(b.exponents())
                .map(|(&x, &y)| x as i64 - y as i64)
                .collect();
            let base: Vec<u32> =
                a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| x.min(y)).collect();
            let term = Polynomial::monomial(MultiIndex::new(base), c);
            let slot = groups.entry(shift).or_insert_with(|| Polynomial::zero(n));
            *slot = &*slot + &term;
        }

        // 1 − x_1 − … − x_{n−1}, as a polynomial in all n variables.
        let mut last = Polynomial::one(n);
        for j in 0..n - 1 {
            last = &last - &Polynomial::var(n, j);
        }
        let mut last_powers: Vec<Polynomial> = alloc::vec![Polynomial::one(n)];

        let mut out = HermitianForm::zero(n);
        for (shift, poly) in groups {
            let mut reduced = Polynomial::zero(n);
            for (k, &c) in poly.stored_terms() {
                let e = k.exponents()[n - 1] as usize;
                while last_powers.len() <= e {
                    let next = &last_powers[last_powers.len() - 1] * &last;
                    last_powers.push(next);
                }
                let mut head = k.exponents().to_vec();
                head[n - 1] = 0;
                let head = Polynomial::monomial(MultiIndex::new(head), c);
                reduced = &reduced + &(&head * &last_powers[e]);
            }
            for (k, &c) in reduced.stored_terms() {
                let row: Vec<u32> = k
                    .exponents()
                    .iter()
                    .zip(&shift)
                    .map(|(&g, &s)| g + s.max(0) as u32)
                    .collect();
                let col: Vec<u32> = k
                    .exponents()
                    .iter()
                    .zip(&shift)
                    .map(|(&g, &s)| g + (-s).max(0) as u32)
                    .collect();
                out.add_entry(MultiIndex::new(row), MultiIndex::new(col), c);
            }
        }
        out.prune();
        out
    }
}
