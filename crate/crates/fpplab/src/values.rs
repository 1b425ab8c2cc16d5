//! Allowed passage-time sets and the deterministic/seeded rules that
//! realize concrete members of them.

use crate::error::{Error, Result};
use crate::rat::{rat, rat_int, rzero, Rat};
use num_traits::Zero;
use rand::Rng;

/// A subinterval of the real line with rational endpoints. `hi = None`
/// stands for +∞ (necessarily open above).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub lo_closed: bool,
    pub hi: Option<Rat>,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: Rat, hi: Rat) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi: Some(hi),
            hi_closed: true,
        }
    }

    pub fn open(lo: Rat, hi: Rat) -> Self {
        Interval {
            lo,
            lo_closed: false,
            hi: Some(hi),
            hi_closed: false,
        }
    }

    pub fn half_open(lo: Rat, hi: Rat) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi: Some(hi),
            hi_closed: false,
        }
    }

    pub fn at_least(lo: Rat) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi: None,
            hi_closed: false,
        }
    }

    pub fn point(v: Rat) -> Self {
        Interval::closed(v.clone(), v)
    }

    pub fn is_empty(&self) -> bool {
        match &self.hi {
            None => false,
            Some(hi) => {
                self.lo > *hi || (self.lo == *hi && !(self.lo_closed && self.hi_closed))
            }
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.hi.is_some()
    }

    pub fn contains(&self, v: &Rat) -> bool {
        let above = *v > self.lo || (self.lo_closed && *v == self.lo);
        let below = match &self.hi {
            None => true,
            Some(hi) => *v < *hi || (self.hi_closed && *v == *hi),
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = if self.lo > other.lo {
            (self.lo.clone(), self.lo_closed)
        } else if other.lo > self.lo {
            (other.lo.clone(), other.lo_closed)
        } else {
            (self.lo.clone(), self.lo_closed && other.lo_closed)
        };
        let (hi, hi_closed) = match (&self.hi, &other.hi) {
            (None, None) => (None, false),
            (Some(h), None) => (Some(h.clone()), self.hi_closed),
            (None, Some(h)) => (Some(h.clone()), other.hi_closed),
            (Some(a), Some(b)) => {
                if a < b {
                    (Some(a.clone()), self.hi_closed)
                } else if b < a {
                    (Some(b.clone()), other.hi_closed)
                } else {
                    (Some(a.clone()), self.hi_closed && other.hi_closed)
                }
            }
        };
        Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueSetKind {
    /// Finite set of rationals, sorted and deduplicated.
    Finite(Vec<Rat>),
    /// Union of disjoint intervals, sorted; a single entry is a plain
    /// interval.
    Intervals(Vec<Interval>),
}

/// The allowed passage-time set `A`. Membership of rationals is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSet {
    kind: ValueSetKind,
    allow_negative: bool,
}

impl ValueSet {
    pub fn finite(mut elements: Vec<Rat>, allow_negative: bool) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let vs = ValueSet {
            kind: ValueSetKind::Finite(elements),
            allow_negative,
        };
        vs.validate()?;
        Ok(vs)
    }

    pub fn interval(iv: Interval, allow_negative: bool) -> Result<Self> {
        Self::intervals(vec![iv], allow_negative)
    }

    pub fn intervals(ivs: Vec<Interval>, allow_negative: bool) -> Result<Self> {
        let vs = ValueSet {
            kind: ValueSetKind::Intervals(ivs),
            allow_negative,
        };
        vs.validate()?;
        Ok(vs)
    }

    /// Convenience: the closed interval `[lo, hi]` of nonnegative values.
    pub fn closed_interval(lo: Rat, hi: Rat) -> Result<Self> {
        Self::interval(Interval::closed(lo, hi), false)
    }

    /// Convenience: a finite set from integer members.
    pub fn finite_ints(elements: &[i64]) -> Result<Self> {
        let neg = elements.iter().any(|e| *e < 0);
        Self::finite(elements.iter().map(|e| rat_int(*e)).collect(), neg)
    }

    fn validate(&self) -> Result<()> {
        match &self.kind {
            ValueSetKind::Finite(els) => {
                if els.len() < 2 {
                    return Err(Error::InvalidValueSet(
                        "value set needs at least two elements".into(),
                    ));
                }
            }
            ValueSetKind::Intervals(ivs) => {
                if ivs.is_empty() || ivs.iter().any(|iv| iv.is_empty()) {
                    return Err(Error::InvalidValueSet("empty interval piece".into()));
                }
                for w in ivs.windows(2) {
                    let gap_ok = match &w[0].hi {
                        None => false,
                        Some(h) => {
                            *h < w[1].lo
                                || (*h == w[1].lo && !(w[0].hi_closed && w[1].lo_closed))
                        }
                    };
                    if !gap_ok {
                        return Err(Error::InvalidValueSet(
                            "interval pieces must be disjoint and sorted".into(),
                        ));
                    }
                }
                // at least two elements: a single degenerate point is too small
                if ivs.len() == 1 {
                    if let Some(h) = &ivs[0].hi {
                        if *h == ivs[0].lo {
                            return Err(Error::InvalidValueSet(
                                "value set needs at least two elements".into(),
                            ));
                        }
                    }
                }
            }
        }
        if !self.allow_negative && self.inf() < rzero() {
            return Err(Error::InvalidValueSet(
                "negative values present but allow_negative is false".into(),
            ));
        }
        if let Some(sup) = self.sup() {
            if self.inf() >= sup {
                return Err(Error::InvalidValueSet("inf must be below sup".into()));
            }
        }
        Ok(())
    }

    pub fn allow_negative(&self) -> bool {
        self.allow_negative
    }

    pub fn kind(&self) -> &ValueSetKind {
        &self.kind
    }

    pub fn inf(&self) -> Rat {
        match &self.kind {
            ValueSetKind::Finite(els) => els[0].clone(),
            ValueSetKind::Intervals(ivs) => ivs[0].lo.clone(),
        }
    }

    /// `None` encodes sup A = ∞.
    pub fn sup(&self) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => Some(els[els.len() - 1].clone()),
            ValueSetKind::Intervals(ivs) => ivs[ivs.len() - 1].hi.clone(),
        }
    }

    pub fn inf_attained(&self) -> bool {
        match &self.kind {
            ValueSetKind::Finite(_) => true,
            ValueSetKind::Intervals(ivs) => ivs[0].lo_closed,
        }
    }

    pub fn sup_attained(&self) -> bool {
        match &self.kind {
            ValueSetKind::Finite(_) => true,
            ValueSetKind::Intervals(ivs) => ivs[ivs.len() - 1].hi_closed,
        }
    }

    pub fn has_isolated_points(&self) -> bool {
        match &self.kind {
            ValueSetKind::Finite(_) => true,
            ValueSetKind::Intervals(ivs) => ivs
                .iter()
                .any(|iv| matches!(&iv.hi, Some(h) if *h == iv.lo)),
        }
    }

    pub fn contains(&self, v: &Rat) -> bool {
        match &self.kind {
            ValueSetKind::Finite(els) => els.binary_search(v).is_ok(),
            ValueSetKind::Intervals(ivs) => ivs.iter().any(|iv| iv.contains(v)),
        }
    }

    /// Smallest isolated member, if any.
    pub fn isolated_member(&self) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => Some(els[0].clone()),
            ValueSetKind::Intervals(ivs) => ivs
                .iter()
                .find(|iv| matches!(&iv.hi, Some(h) if *h == iv.lo))
                .map(|iv| iv.lo.clone()),
        }
    }

    /// Smallest negative member when the infimum is attained, otherwise
    /// some negative member strictly below half the infimum gap.
    pub fn negative_member(&self) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => els.iter().find(|e| **e < rzero()).cloned(),
            ValueSetKind::Intervals(ivs) => {
                let iv = ivs.iter().find(|iv| iv.lo < rzero())?;
                if iv.lo_closed {
                    Some(iv.lo.clone())
                } else {
                    // pick a point strictly inside, still negative
                    let hi = iv.hi.clone().unwrap_or_else(rzero).min(rzero());
                    let mid = (&iv.lo + hi) / rat_int(2);
                    if iv.contains(&mid) && mid < rzero() {
                        Some(mid)
                    } else {
                        None
                    }
                }
            }
        }
    }

    /// A member of A strictly above `threshold`: the smallest such
    /// element for finite sets, `threshold + 1` for unbounded interval
    /// kinds, and a point inside the first interval piece beyond the
    /// threshold otherwise.
    pub fn member_above(&self, threshold: &Rat) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => els.iter().find(|e| *e > threshold).cloned(),
            ValueSetKind::Intervals(_) => {
                if self.sup().is_none() {
                    let cand = threshold + rat_int(1);
                    if self.contains(&cand) {
                        return Some(cand);
                    }
                }
                self.pick_in(&Interval {
                    lo: threshold.clone(),
                    lo_closed: false,
                    hi: None,
                    hi_closed: false,
                })
            }
        }
    }

    /// Deterministic realization of a member of `A ∩ iv`, or `None` when
    /// the intersection is empty. Closed finite endpoints are preferred;
    /// open intervals are realized at interior midpoints.
    pub fn pick_in(&self, iv: &Interval) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => els.iter().find(|e| iv.contains(e)).cloned(),
            ValueSetKind::Intervals(ivs) => {
                for piece in ivs {
                    let x = piece.intersect(iv);
                    if x.is_empty() {
                        continue;
                    }
                    if x.lo_closed {
                        return Some(x.lo);
                    }
                    if let Some(h) = &x.hi {
                        if x.hi_closed {
                            return Some(h.clone());
                        }
                        return Some((&x.lo + h) / rat_int(2));
                    }
                    return Some(&x.lo + rat_int(1));
                }
                None
            }
        }
    }

    /// Seeded realization of a member of `A ∩ iv`; deterministic under a
    /// fixed RNG stream, varying across draws. Falls back to the
    /// deterministic pick when the intersection is a single point.
    pub fn pick_in_seeded<R: Rng>(&self, iv: &Interval, rng: &mut R) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => {
                let hits: Vec<&Rat> = els.iter().filter(|e| iv.contains(e)).collect();
                if hits.is_empty() {
                    None
                } else {
                    Some(hits[rng.random_range(0..hits.len())].clone())
                }
            }
            ValueSetKind::Intervals(ivs) => {
                let pieces: Vec<Interval> = ivs
                    .iter()
                    .map(|p| p.intersect(iv))
                    .filter(|x| !x.is_empty())
                    .collect();
                if pieces.is_empty() {
                    return None;
                }
                let x = &pieces[rng.random_range(0..pieces.len())];
                let lo = x.lo.clone();
                let hi = match &x.hi {
                    Some(h) => h.clone(),
                    None => &lo + rat_int(2),
                };
                if hi == lo {
                    return Some(lo);
                }
                // dyadic jitter strictly inside (lo, hi): lo + (hi-lo) * j/2^12
                let denom = 1i64 << 12;
                let j = rng.random_range(1..denom);
                let v = &lo + (&hi - &lo) * rat(j, denom);
                debug_assert!(x.contains(&v) || v == lo || v == hi);
                if x.contains(&v) {
                    Some(v)
                } else {
                    self.pick_in(iv)
                }
            }
        }
    }

    /// Upper bound of `A ∩ iv` (for the constraint cost cap); `None` if
    /// the intersection is unbounded above, `Some(None)` never occurs.
    pub fn sup_within(&self, iv: &Interval) -> Option<Rat> {
        match &self.kind {
            ValueSetKind::Finite(els) => {
                els.iter().rev().find(|e| iv.contains(e)).cloned()
            }
            ValueSetKind::Intervals(ivs) => {
                let mut best: Option<Rat> = None;
                for piece in ivs {
                    let x = piece.intersect(iv);
                    if x.is_empty() {
                        continue;
                    }
                    match &x.hi {
                        None => return None,
                        Some(h) => {
                            let h = h.clone();
                            best = Some(match best {
                                None => h,
                                Some(b) => b.max(h),
                            });
                        }
                    }
                }
                best
            }
        }
    }
}

/// Per-edge epsilon allocation: a dyadically decaying split of a total
/// budget over an enumerated list of targeted edges, so the per-edge
/// values are positive and sum below the budget.
#[derive(Debug, Clone)]
pub struct EpsilonSchedule {
    total: Rat,
}

impl EpsilonSchedule {
    pub fn new(total: Rat) -> Result<Self> {
        if total <= rzero() {
            return Err(Error::InvalidEpsilon);
        }
        Ok(EpsilonSchedule { total })
    }

    pub fn total(&self) -> &Rat {
        &self.total
    }

    /// ε_e for the j-th targeted edge (0-based): ε · 2^-(j+1).
    pub fn epsilon_for(&self, j: usize) -> Rat {
        let mut denom = Rat::from_integer(1.into());
        let two = rat_int(2);
        for _ in 0..=j.min(512) {
            denom *= &two;
        }
        &self.total / denom
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn a_1_10() -> ValueSet {
        ValueSet::closed_interval(rat_int(1), rat_int(10)).unwrap()
    }

    #[test]
    fn finite_membership() {
        let a = ValueSet::finite_ints(&[1, 2]).unwrap();
        assert!(a.contains(&rat_int(1)));
        assert!(a.contains(&rat_int(2)));
        assert!(!a.contains(&rat(3, 2)));
        assert!(a.has_isolated_points());
        assert_eq!(a.inf(), rat_int(1));
        assert_eq!(a.sup(), Some(rat_int(2)));
    }

    #[test]
    fn interval_membership_and_bounds() {
        let a = a_1_10();
        assert!(a.contains(&rat(3, 2)));
        assert!(!a.contains(&rat(21, 2)));
        assert!(!a.has_isolated_points());
        assert!(a.inf_attained());
        let unbounded = ValueSet::interval(Interval::at_least(rzero()), false).unwrap();
        assert_eq!(unbounded.sup(), None);
        assert!(unbounded.contains(&rat_int(1_000_000)));
    }

    #[test]
    fn rejects_too_small_sets() {
        assert!(ValueSet::finite(vec![Rat::one()], false).is_err());
        assert!(ValueSet::interval(Interval::point(Rat::one()), false).is_err());
        assert!(ValueSet::finite_ints(&[]).is_err());
    }

    #[test]
    fn rejects_negative_without_flag() {
        assert!(ValueSet::finite(vec![rat_int(-1), rat_int(1)], false).is_err());
        assert!(ValueSet::finite(vec![rat_int(-1), rat_int(1)], true).is_ok());
    }

    #[test]
    fn member_above_rules() {
        let fin = ValueSet::finite_ints(&[1, 4, 8]).unwrap();
        assert_eq!(fin.member_above(&rat(15, 2)), Some(rat_int(8)));
        assert_eq!(fin.member_above(&rat_int(8)), None);
        let unb = ValueSet::interval(Interval::at_least(rzero()), false).unwrap();
        assert_eq!(unb.member_above(&rat_int(5)), Some(rat_int(6)));
        let a = a_1_10();
        // bounded interval: a point of (15/2, 10]
        let m = a.member_above(&rat(15, 2)).unwrap();
        assert!(m > rat(15, 2) && a.contains(&m));
    }

    #[test]
    fn pick_in_prefers_closed_endpoints() {
        let a = a_1_10();
        assert_eq!(
            a.pick_in(&Interval::half_open(rat_int(1), rat(3, 2))),
            Some(rat_int(1))
        );
        // (3/2, 2] picks the closed top
        assert_eq!(
            a.pick_in(&Interval {
                lo: rat(3, 2),
                lo_closed: false,
                hi: Some(rat_int(2)),
                hi_closed: true,
            }),
            Some(rat_int(2))
        );
        // open interval around 8 picks the midpoint
        assert_eq!(
            a.pick_in(&Interval::open(rat(15, 2), rat(17, 2))),
            Some(rat_int(8))
        );
        assert_eq!(a.pick_in(&Interval::open(rat_int(11), rat_int(12))), None);
    }

    #[test]
    fn epsilon_schedule_sums_below_budget() {
        let sched = EpsilonSchedule::new(rat(1, 2)).unwrap();
        let mut sum = rzero();
        for j in 0..40 {
            let e = sched.epsilon_for(j);
            assert!(e > rzero());
            sum += e;
        }
        assert!(sum < rat(1, 2));
        assert!(EpsilonSchedule::new(rzero()).is_err());
    }

    #[test]
    fn union_of_intervals() {
        let a = ValueSet::intervals(
            vec![
                Interval::closed(rat_int(0), rat_int(1)),
                Interval::closed(rat_int(3), rat_int(4)),
            ],
            false,
        )
        .unwrap();
        assert!(a.contains(&rat(1, 2)));
        assert!(!a.contains(&rat_int(2)));
        assert_eq!(a.inf(), rzero());
        assert_eq!(a.sup(), Some(rat_int(4)));
        // overlapping pieces rejected
        assert!(ValueSet::intervals(
            vec![
                Interval::closed(rat_int(0), rat_int(2)),
                Interval::closed(rat_int(1), rat_int(4)),
            ],
            false,
        )
        .is_err());
    }
}
