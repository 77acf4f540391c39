use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use num_traits::Float;

use super::{homotopy_to_monomial, unitary_bridge, HomotopyFamily, JUNCTION_SLACK};
use crate::ballmap::RationalBallMap;
use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial};
use crate::whitney::WhitneyTerm;
use crate::{Settings, TAU};

/// One monomial per slot, stored with its squared modulus.
type Slots = Vec<Option<(MultiIndex, f64)>>;

fn slots_map(n: usize, slots: &Slots) -> Result<RationalBallMap> {
    let numerator = slots
        .iter()
        .map(|s| match s {
            Some((alpha, w)) => Polynomial::monomial(alpha.clone(), Complex64::new(Float::sqrt(*w), 0.0)),
            None => Polynomial::zero(n),
        })
        .collect();
    RationalBallMap::polynomial(n, numerator)
}

fn find(slots: &Slots, alpha: &MultiIndex) -> Option<usize> {
    slots.iter().position(|s| s.as_ref().is_some_and(|(a, _)| a == alpha))
}

/// One λ-step: weight `c²` moves from each sibling `z_i q` to `q` as
/// `λ = cos(πs/2)` runs from 1 to 0.
struct LambdaStep {
    n: usize,
    slots: Slots,
    siblings: Vec<(usize, f64)>,
    parent: usize,
    lowered: MultiIndex,
    parent_weight: f64,
    share: f64,
}

impl LambdaStep {
    fn at(&self, s: f64) -> Result<RationalBallMap> {
        let lambda = Float::cos(FRAC_PI_2 * s);
        let l2 = lambda * lambda;
        let mut slots = self.slots.clone();
        for &(k, rest) in &self.siblings {
            if let Some((_, w)) = slots[k].as_mut() {
                *w = rest + l2 * self.share;
            }
        }
        slots[self.parent] = Some((self.lowered.clone(), self.parent_weight + (1.0 - l2) * self.share));
        slots_map(self.n, &slots)
    }
}

/// Homotopy in target dimension `N + 1` from a monomial map in the image of
/// the tensor operation to the linear injection `z ⊕ 0`.
///
/// Repeatedly takes the lexicographically last top-degree monomial `m`,
/// writes `m = z_j q` with `j` the last variable present, and moves weight
/// from the siblings `z_1 q, …, z_n q` onto `q`. Fails with
/// [`Error::NotTensorImage`] when a sibling is missing.
pub fn collapse_to_linear(f: &RationalBallMap, settings: &Settings) -> Result<HomotopyFamily> {
    if !f.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let n = f.domain_dim();
    let big_n = f.target_dim();
    let mut slots: Slots = alloc::vec![None; big_n + 1];
    for (k, p) in f.numerator().iter().enumerate() {
        if let Some((alpha, c)) = p.as_monomial() {
            match find(&slots, alpha) {
                Some(s) => slots[s].as_mut().expect("found").1 += c.norm_sqr(),
                None => slots[k] = Some((alpha.clone(), c.norm_sqr())),
            }
        }
    }
    let start = f.padded(big_n + 1);
    let mut segments: Vec<HomotopyFamily> = Vec::new();
    let canonical = slots_map(n, &slots)?;
    if start.max_coeff_diff(&canonical) > JUNCTION_SLACK {
        segments.push(unitary_bridge(&start, &canonical, settings)?);
    }
    loop {
        let top = slots.iter().flatten().map(|(a, _)| a.degree()).max().unwrap_or(0);
        if top <= 1 {
            break;
        }
        let m = slots
            .iter()
            .flatten()
            .filter(|(a, _)| a.degree() == top)
            .map(|(a, _)| a.clone())
            .min()
            .expect("a monomial of top degree exists");
        let j = (0..n).rev().find(|&j| m.exponents()[j] > 0).expect("positive degree");
        let q = m.checked_minus(&MultiIndex::unit(n, j)).expect("z_j divides m");
        let mut siblings = Vec::with_capacity(n);
        for i in 0..n {
            let slot = find(&slots, &q.plus(&MultiIndex::unit(n, i)))
                .ok_or_else(|| Error::NotTensorImage { monomial: m.clone() })?;
            siblings.push((slot, slots[slot].as_ref().expect("found").1));
        }
        let share = siblings.iter().map(|&(_, w)| w).fold(f64::INFINITY, f64::min);
        let parent = match find(&slots, &q) {
            Some(s) => s,
            None => slots
                .iter()
                .position(Option::is_none)
                .ok_or_else(|| Error::InvalidArgument("no free component for the lowered monomial".into()))?,
        };
        let parent_weight = slots[parent].as_ref().map_or(0.0, |(_, w)| *w);
        let siblings: Vec<(usize, f64)> = siblings
            .into_iter()
            .map(|(k, w)| {
                let rest = w - share;
                (k, if rest <= 1e3 * TAU * w.max(1.0) { 0.0 } else { rest })
            })
            .collect();
        let step = LambdaStep {
            n,
            slots: slots.clone(),
            siblings: siblings.clone(),
            parent,
            lowered: q.clone(),
            parent_weight,
            share,
        };
        let left = step.at(0.0)?;
        let right = step.at(1.0)?;
        segments.push(HomotopyFamily::new("lambda", big_n + 1, left, right, move |s| step.at(s))?);
        for (k, rest) in siblings {
            if rest == 0.0 {
                slots[k] = None;
            } else if let Some((_, w)) = slots[k].as_mut() {
                *w = rest;
            }
        }
        slots[parent] = Some((q, parent_weight + share));
    }
    let linear = slots_map(n, &slots)?;
    let target = RationalBallMap::identity(n).padded(big_n + 1);
    if linear.max_coeff_diff(&target) > JUNCTION_SLACK {
        segments.push(unitary_bridge(&linear, &target, settings)?);
    }
    if segments.is_empty() {
        segments.push(HomotopyFamily::constant("linear", start));
    }
    let fam = HomotopyFamily::concat("collapse", segments, settings)?;
    let eval = fam.clone();
    HomotopyFamily::new("collapse", big_n + 1, f.clone(), RationalBallMap::identity(n), move |t| eval.at(t))
}

/// `F_k ⊕ 0` to `z ⊕ 0` in target dimension `N + 1`: the monomial homotopy
/// followed by [`collapse_to_linear`] of its endpoint.
pub fn whitney_to_linear(term: &WhitneyTerm, settings: &Settings) -> Result<HomotopyFamily> {
    let to_monomial = homotopy_to_monomial(term)?;
    let collapse = collapse_to_linear(to_monomial.right(), settings)?;
    HomotopyFamily::concat("whitney.linear", alloc::vec![to_monomial, collapse], settings)
}
