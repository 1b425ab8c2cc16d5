//! Cylinder constraints (finitely many overridden edges) and concrete
//! edge-weight configurations on a window.

use crate::error::{Error, Result};
use crate::lattice::{Edge, LatticePoint, Window};
use crate::rat::{rzero, Rat};
use crate::values::{Interval, ValueSet};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// A finite map edge → subinterval of A; the finitely-supported open
/// boxes every construction starts from. After [`CylinderConstraint::bounded`]
/// every override is bounded above, so the cost cap is finite.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CylinderConstraint {
    overrides: BTreeMap<Edge, Interval>,
}

impl CylinderConstraint {
    pub fn empty() -> Self {
        CylinderConstraint::default()
    }

    pub fn new(overrides: BTreeMap<Edge, Interval>, a: &ValueSet) -> Result<Self> {
        for iv in overrides.values() {
            if a.pick_in(iv).is_none() {
                return Err(Error::EmptyIntersection);
            }
        }
        Ok(CylinderConstraint { overrides })
    }

    pub fn overrides(&self) -> &BTreeMap<Edge, Interval> {
        &self.overrides
    }

    pub fn get(&self, e: &Edge) -> Option<&Interval> {
        self.overrides.get(e)
    }

    /// Number of overridden edges (the `k` of the proofs).
    pub fn k(&self) -> usize {
        self.overrides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.overrides.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.overrides.keys()
    }

    /// Shrink unbounded overrides to bounded ones that still meet A.
    /// This is the bounding step every proof applies to `U` before
    /// estimating; the result refines `self`.
    pub fn bounded(&self, a: &ValueSet) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (e, iv) in &self.overrides {
            let mut iv = iv.clone();
            if !iv.is_bounded() {
                let witness = a
                    .pick_in(&iv)
                    .ok_or(Error::EmptyIntersection)?;
                iv = iv.intersect(&Interval {
                    lo: iv.lo.clone(),
                    lo_closed: iv.lo_closed,
                    hi: Some(witness),
                    hi_closed: true,
                });
            }
            out.insert(e.clone(), iv);
        }
        CylinderConstraint::new(out, a)
    }

    /// Cost cap C: the sum of the per-edge suprema of the overrides
    /// within A. `None` when some override is still unbounded.
    pub fn cost_cap(&self, a: &ValueSet) -> Option<Rat> {
        let mut total = rzero();
        for iv in self.overrides.values() {
            total += a.sup_within(iv)?;
        }
        Some(total)
    }

    /// Refine one edge's projection; the new interval must still meet A.
    pub fn with_override(&self, e: Edge, iv: Interval, a: &ValueSet) -> Result<Self> {
        let mut map = self.overrides.clone();
        map.insert(e, iv);
        CylinderConstraint::new(map, a)
    }
}

/// Rule assigning weights to edges not covered by any override.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefaultRule {
    /// Every unconstrained edge gets this member of A.
    Fixed(Rat),
    /// Seeded draw from a declared finite candidate list (all members of A).
    Choice(Vec<Rat>),
}

/// Exact edge-weight assignment on a finite window: the finite
/// restriction of one configuration. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    window: Window,
    value_set: ValueSet,
    default_rule: DefaultRule,
    weights: Vec<Rat>,
    constraint: Option<CylinderConstraint>,
}

impl Configuration {
    /// Assemble and validate: every weight a member of A, overridden
    /// edges within their intervals, weight count matching the window.
    pub fn new(
        window: Window,
        value_set: ValueSet,
        default_rule: DefaultRule,
        weights: Vec<Rat>,
        constraint: Option<CylinderConstraint>,
    ) -> Result<Self> {
        if weights.len() != window.edge_count() {
            return Err(Error::Malformed(format!(
                "expected {} weights, got {}",
                window.edge_count(),
                weights.len()
            )));
        }
        let cfg = Configuration {
            window,
            value_set,
            default_rule,
            weights,
            constraint,
        };
        cfg.check_invariants()?;
        Ok(cfg)
    }

    pub fn check_invariants(&self) -> Result<()> {
        for (i, w) in self.weights.iter().enumerate() {
            if !self.value_set.contains(w) {
                let e = &self.window.edges()[i];
                return Err(Error::Malformed(format!(
                    "weight {} at edge {:?} is not a member of A",
                    crate::rat::format_rat(w),
                    e
                )));
            }
        }
        if let Some(c) = &self.constraint {
            for (e, iv) in c.overrides() {
                let idx = self.window.edge_index(e).ok_or(Error::CoverageError)?;
                if !iv.contains(&self.weights[idx]) {
                    return Err(Error::Malformed(
                        "overridden edge weight outside its interval".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn value_set(&self) -> &ValueSet {
        &self.value_set
    }

    pub fn default_rule(&self) -> &DefaultRule {
        &self.default_rule
    }

    pub fn constraint(&self) -> Option<&CylinderConstraint> {
        self.constraint.as_ref()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn weight(&self, e: &Edge) -> Result<&Rat> {
        let idx = self.window.edge_index(e).ok_or(Error::OutOfWindow)?;
        Ok(&self.weights[idx])
    }

    pub fn has_negative(&self) -> bool {
        self.weights.iter().any(|w| *w < rzero())
    }

    pub fn has_nonpositive(&self) -> bool {
        self.weights.iter().any(|w| *w <= rzero())
    }

    /// Same window and constraint with every weight multiplied by c > 0.
    /// Callers are responsible for the scaled weights still lying in a
    /// value set; the scaled configuration carries a scaled interval A.
    pub fn scaled(&self, c: &Rat) -> Result<Configuration> {
        if *c <= rzero() {
            return Err(Error::Malformed("scale factor must be positive".into()));
        }
        let weights: Vec<Rat> = self.weights.iter().map(|w| w * c).collect();
        let mut sorted = weights.clone();
        sorted.sort();
        sorted.dedup();
        let value_set = if sorted.len() >= 2 {
            ValueSet::finite(sorted, self.has_negative())?
        } else {
            self.value_set.clone()
        };
        Configuration::new(
            self.window.clone(),
            value_set,
            DefaultRule::Fixed(weights[0].clone()),
            weights,
            None,
        )
    }

    /// Copy with a single edge weight replaced (tests and the monotone
    /// coupling property use this).
    pub fn with_weight(&self, e: &Edge, w: Rat) -> Result<Configuration> {
        let idx = self.window.edge_index(e).ok_or(Error::OutOfWindow)?;
        let mut weights = self.weights.clone();
        let mut value_set = self.value_set.clone();
        if !value_set.contains(&w) {
            let mut els: Vec<Rat> = weights.clone();
            els.push(w.clone());
            els.sort();
            els.dedup();
            value_set = ValueSet::finite(els, self.has_negative() || w < rzero())?;
        }
        weights[idx] = w;
        Configuration::new(
            self.window.clone(),
            value_set,
            self.default_rule.clone(),
            weights,
            None,
        )
    }
}

/// Realize one concrete configuration of a cylinder set: overridden
/// edges are drawn inside their intervals, all other window edges follow
/// the default rule. Deterministic under a fixed seed.
pub fn sample_configuration(
    constraint: &CylinderConstraint,
    window: &Window,
    value_set: &ValueSet,
    default: &DefaultRule,
    seed: u64,
) -> Result<Configuration> {
    for e in constraint.edges() {
        if !window.contains_edge(e) {
            return Err(Error::CoverageError);
        }
    }
    match default {
        DefaultRule::Fixed(v) => {
            if !value_set.contains(v) {
                return Err(Error::Malformed(
                    "default value is not a member of A".into(),
                ));
            }
        }
        DefaultRule::Choice(cands) => {
            if cands.is_empty() || cands.iter().any(|v| !value_set.contains(v)) {
                return Err(Error::Malformed(
                    "default candidates must be nonempty members of A".into(),
                ));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = window.edges();
    let mut weights = Vec::with_capacity(edges.len());
    for e in &edges {
        let w = match constraint.get(e) {
            Some(iv) => value_set
                .pick_in_seeded(iv, &mut rng)
                .ok_or(Error::EmptyIntersection)?,
            None => match default {
                DefaultRule::Fixed(v) => v.clone(),
                DefaultRule::Choice(cands) => {
                    use rand::Rng;
                    cands[rng.random_range(0..cands.len())].clone()
                }
            },
        };
        weights.push(w);
    }
    Configuration::new(
        window.clone(),
        value_set.clone(),
        default.clone(),
        weights,
        Some(constraint.clone()),
    )
}

/// Uniform configuration: every edge gets the same member of A.
pub fn uniform_configuration(
    window: &Window,
    value_set: &ValueSet,
    weight: Rat,
) -> Result<Configuration> {
    if !value_set.contains(&weight) {
        return Err(Error::Malformed("weight is not a member of A".into()));
    }
    let n = window.edge_count();
    Configuration::new(
        window.clone(),
        value_set.clone(),
        DefaultRule::Fixed(weight.clone()),
        vec![weight; n],
        None,
    )
}

/// Helper for tests and scenarios: a canonical constraint from explicit
/// (base, axis, interval) triples.
pub fn constraint_from_triples(
    triples: Vec<(Vec<i64>, usize, Interval)>,
    a: &ValueSet,
) -> Result<CylinderConstraint> {
    let mut map = BTreeMap::new();
    for (coords, axis, iv) in triples {
        map.insert(Edge::new(LatticePoint::new(coords), axis), iv);
    }
    CylinderConstraint::new(map, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn a12() -> ValueSet {
        ValueSet::finite_ints(&[1, 2]).unwrap()
    }

    #[test]
    fn sample_no_overrides_fixed_default() {
        let w = Window::new(vec![0, 0], vec![2, 2]).unwrap();
        let cfg = sample_configuration(
            &CylinderConstraint::empty(),
            &w,
            &a12(),
            &DefaultRule::Fixed(rat_int(1)),
            0,
        )
        .unwrap();
        assert!(cfg.weights().iter().all(|x| *x == rat_int(1)));
    }

    #[test]
    fn sample_respects_override_interval() {
        let a = ValueSet::closed_interval(rat_int(1), rat_int(2)).unwrap();
        let w = Window::new(vec![0, 0], vec![1, 1]).unwrap();
        let e = Edge::new(LatticePoint::new(vec![0, 0]), 0);
        let iv = Interval {
            lo: rat(3, 2),
            lo_closed: false,
            hi: Some(rat_int(2)),
            hi_closed: true,
        };
        let c = constraint_from_triples(vec![(vec![0, 0], 0, iv.clone())], &a).unwrap();
        let cfg =
            sample_configuration(&c, &w, &a, &DefaultRule::Fixed(rat_int(1)), 7).unwrap();
        let got = cfg.weight(&e).unwrap();
        assert!(iv.contains(got) && a.contains(got));
    }

    #[test]
    fn sample_deterministic_under_seed() {
        let a = ValueSet::closed_interval(rat_int(1), rat_int(2)).unwrap();
        let w = Window::new(vec![0, 0], vec![3, 3]).unwrap();
        let c = constraint_from_triples(
            vec![(vec![0, 0], 0, Interval::open(rat_int(1), rat_int(2)))],
            &a,
        )
        .unwrap();
        let rule = DefaultRule::Choice(vec![rat_int(1), rat(3, 2), rat_int(2)]);
        let c1 = sample_configuration(&c, &w, &a, &rule, 42).unwrap();
        let c2 = sample_configuration(&c, &w, &a, &rule, 42).unwrap();
        assert_eq!(c1, c2);
        let c3 = sample_configuration(&c, &w, &a, &rule, 43).unwrap();
        assert!(c1 != c3, "different seeds should vary somewhere");
    }

    #[test]
    fn sample_rejects_bad_inputs() {
        let a = a12();
        let w = Window::new(vec![0, 0], vec![1, 1]).unwrap();
        // override outside the window
        let c = constraint_from_triples(
            vec![(vec![5, 5], 0, Interval::point(rat_int(1)))],
            &a,
        )
        .unwrap();
        assert!(matches!(
            sample_configuration(&c, &w, &a, &DefaultRule::Fixed(rat_int(1)), 0),
            Err(Error::CoverageError)
        ));
        // empty intersection is rejected at constraint construction
        assert!(matches!(
            constraint_from_triples(
                vec![(vec![0, 0], 0, Interval::open(rat(5, 4), rat(3, 2)))],
                &a,
            ),
            Err(Error::EmptyIntersection)
        ));
    }

    #[test]
    fn bounded_caps_cost() {
        let a = ValueSet::interval(Interval::at_least(rzero()), false).unwrap();
        let c = constraint_from_triples(
            vec![
                (vec![0, 0], 0, Interval::at_least(rat_int(3))),
                (vec![1, 1], 1, Interval::closed(rat_int(0), rat_int(2))),
            ],
            &a,
        )
        .unwrap();
        assert_eq!(c.cost_cap(&a), None);
        let b = c.bounded(&a).unwrap();
        let cap = b.cost_cap(&a).unwrap();
        assert!(cap >= rat_int(2));
        assert_eq!(b.k(), 2);
    }

    #[test]
    fn invariant_checker_catches_mismatch() {
        let a = a12();
        let w = Window::new(vec![0, 0], vec![1, 0]).unwrap();
        let bad = Configuration::new(
            w.clone(),
            a.clone(),
            DefaultRule::Fixed(rat_int(1)),
            vec![rat(3, 2)],
            None,
        );
        assert!(bad.is_err());
        let ok = Configuration::new(w, a, DefaultRule::Fixed(rat_int(1)), vec![rat_int(2)], None);
        assert!(ok.is_ok());
    }
}
