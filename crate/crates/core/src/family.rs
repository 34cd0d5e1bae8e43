//! Bigraded families of λ-series.
//!
//! A [`PSeriesFamily`] stands for `Σ F_{μ⁺,μ⁻}(λ) p⁺_{μ⁺} p⁻_{μ⁻}` truncated at
//! `|μ⁺| ≤ D⁺`, `|μ⁻| ≤ D⁻`. Products multiply the power-sum monomials,
//! which is union of partitions in each slot. Since every term without the
//! constant monomial raises the total degree, `exp` and `log` are finite
//! sums under the caps.
//!
//! Entries present in the map are known to the family order (possibly as
//! zero); absent entries are exactly zero.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{Rational, Ring, Series, TauPoly};
use crate::partitions::Partition;
use crate::symfun::cut_join_monomial;

#[derive(Clone, PartialEq)]
pub struct PSeriesFamily<R = TauPoly> {
    caps: (usize, usize),
    order: i64,
    entries: BTreeMap<(Partition, Partition), Series<R>>,
}

impl<R: Ring> PSeriesFamily<R> {
    pub fn zero(caps: (usize, usize), order: i64) -> Self {
        PSeriesFamily { caps, order, entries: BTreeMap::new() }
    }

    /// The constant family 1.
    pub fn one(caps: (usize, usize), order: i64) -> Self {
        let mut f = Self::zero(caps, order);
        f.entries.insert((Partition::empty(), Partition::empty()), Series::one(order));
        f
    }

    pub fn caps(&self) -> (usize, usize) {
        self.caps
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn within_caps(&self, mu_plus: &Partition, mu_minus: &Partition) -> bool {
        mu_plus.size() <= self.caps.0 && mu_minus.size() <= self.caps.1
    }

    /// Set an entry. The series must be known to the family order and the
    /// pair must lie within the caps.
    pub fn insert(&mut self, mu_plus: Partition, mu_minus: Partition, s: Series<R>) -> Result<()> {
        if !self.within_caps(&mu_plus, &mu_minus) {
            return Err(Error::Domain(format!("entry ({mu_plus}, {mu_minus}) exceeds caps {:?}", self.caps)));
        }
        let s = s.require_order(self.order)?;
        self.entries.insert((mu_plus, mu_minus), s);
        Ok(())
    }

    /// Entry at `(μ⁺, μ⁻)`; zero when absent.
    pub fn get(&self, mu_plus: &Partition, mu_minus: &Partition) -> Series<R> {
        self.entries
            .get(&(mu_plus.clone(), mu_minus.clone()))
            .cloned()
            .unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &Series<R>)> {
        self.entries.iter().map(|((a, b), s)| (a, b, s))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every entry vanishes to the family order.
    pub fn is_zero(&self) -> bool {
        self.entries.values().all(Series::is_zero)
    }

    /// Build from raw entries, lowering the family order to the least
    /// entry order and truncating everything to it.
    fn from_entries(caps: (usize, usize), order: i64, entries: BTreeMap<(Partition, Partition), Series<R>>) -> Self {
        Self::from_entries_raw(caps, order, entries).normalized()
    }

    /// Like `from_entries` but entries keep their own orders; used inside
    /// `exp` and `log` so that precision is lost per entry, not globally.
    fn from_entries_raw(caps: (usize, usize), order: i64, entries: BTreeMap<(Partition, Partition), Series<R>>) -> Self {
        let order = entries.values().map(Series::order).fold(order, i64::min);
        PSeriesFamily { caps, order, entries }
    }

    fn normalized(self) -> Self {
        let order = self.order;
        let entries = self.entries.into_iter().map(|(k, s)| (k, s.truncate(order))).collect();
        PSeriesFamily { caps: self.caps, order, entries }
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let entries = self.entries.iter().map(|(k, s)| (k.clone(), s.truncate(order))).collect();
        PSeriesFamily { caps: self.caps, order, entries }
    }

    /// Require the family to be known to `order`, then cut to it.
    pub fn require_order(&self, order: i64) -> Result<Self> {
        if self.order < order {
            return Err(Error::InsufficientPrecision { required: order, available: self.order });
        }
        Ok(self.truncate(order))
    }

    /// Restrict to smaller caps.
    pub fn restrict(&self, caps: (usize, usize)) -> Self {
        let entries = self
            .entries
            .iter()
            .filter(|((a, b), _)| a.size() <= caps.0 && b.size() <= caps.1)
            .map(|(k, s)| (k.clone(), s.clone()))
            .collect();
        PSeriesFamily { caps, order: self.order, entries }
    }

    /// Apply `f` to every entry.
    pub fn map<S: Ring>(&self, f: impl Fn(&Series<R>) -> Series<S>) -> PSeriesFamily<S> {
        self.map_raw(f).normalized()
    }

    fn map_raw<S: Ring>(&self, f: impl Fn(&Series<R>) -> Series<S>) -> PSeriesFamily<S> {
        let entries = self.entries.iter().map(|(k, s)| (k.clone(), f(s))).collect();
        PSeriesFamily::from_entries_raw(self.caps, self.order, entries)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_raw(other).normalized()
    }

    fn add_raw(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        for (k, s) in &other.entries {
            let sum = match entries.get(k) {
                Some(t) => t.add(s),
                None => s.clone(),
            };
            entries.insert(k.clone(), sum);
        }
        Self::from_entries_raw(self.caps, self.order.min(other.order), entries)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_by(&-R::one()))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|s| s.scale_by(c))
    }

    /// Product in the bigraded algebra, dropping terms beyond the caps.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_raw(other).normalized()
    }

    fn mul_raw(&self, other: &Self) -> Self {
        let caps = (self.caps.0.min(other.caps.0), self.caps.1.min(other.caps.1));
        let mut entries: BTreeMap<(Partition, Partition), Series<R>> = BTreeMap::new();
        for ((a1, b1), s) in &self.entries {
            for ((a2, b2), t) in &other.entries {
                if a1.size() + a2.size() > caps.0 || b1.size() + b2.size() > caps.1 {
                    continue;
                }
                let key = (a1.union(a2), b1.union(b2));
                let prod = s.mul(t);
                let sum = match entries.get(&key) {
                    Some(e) => e.add(&prod),
                    None => prod,
                };
                entries.insert(key, sum);
            }
        }
        Self::from_entries_raw(caps, self.order.min(other.order), entries)
    }

    fn split_constant(&self) -> (Series<R>, Self) {
        let key = (Partition::empty(), Partition::empty());
        let c = self.entries.get(&key).cloned().unwrap_or_else(|| Series::zero(self.order));
        let mut rest = self.clone();
        rest.entries.remove(&key);
        (c, rest)
    }

    fn max_power(&self) -> usize {
        self.caps.0 + self.caps.1
    }

    /// `log F` for `F` with constant entry 1.
    pub fn log(&self) -> Result<Self> {
        let (c, x) = self.split_constant();
        if c != Series::one(self.order) {
            return Err(Error::Domain(format!("log needs constant entry 1, found {c:?}")));
        }
        let mut power = x.clone();
        let mut out = Self::zero(self.caps, self.order);
        for k in 1..=self.max_power() {
            if power.is_empty() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add_raw(&power.map_raw(|s| s.scale(&Rational::new(sign, k as i64))));
            power = power.mul_raw(&x);
        }
        Ok(out.with_caps(self.caps).normalized())
    }

    /// `exp F` for `F` with zero constant entry.
    pub fn exp(&self) -> Result<Self> {
        let (c, x) = self.split_constant();
        if !c.is_zero() {
            return Err(Error::Domain(format!("exp needs constant entry 0, found {c:?}")));
        }
        let mut power = x.clone();
        let mut out = Self::one(self.caps, self.order);
        let mut fact = 1i64;
        for k in 1..=self.max_power() {
            if power.is_empty() {
                break;
            }
            fact *= k as i64;
            out = out.add_raw(&power.map_raw(|s| s.scale(&Rational::new(1, fact))));
            power = power.mul_raw(&x);
        }
        Ok(out.with_caps(self.caps).normalized())
    }

    fn with_caps(mut self, caps: (usize, usize)) -> Self {
        self.caps = caps;
        self
    }

    fn cut_join_slot(&self, plus: bool) -> Self {
        let mut entries: BTreeMap<(Partition, Partition), Series<R>> = BTreeMap::new();
        for ((a, b), s) in &self.entries {
            let target = if plus { a } else { b };
            for (rho, c) in cut_join_monomial(target) {
                let key = if plus { (rho, b.clone()) } else { (a.clone(), rho) };
                let term = s.scale(&c);
                let sum = match entries.get(&key) {
                    Some(e) => e.add(&term),
                    None => term,
                };
                entries.insert(key, sum);
            }
        }
        Self::from_entries(self.caps, self.order, entries)
    }

    /// `(1/2)(C⁺+J⁺)` acting on the `p⁺` variables.
    pub fn cut_join_plus(&self) -> Self {
        self.cut_join_slot(true)
    }

    /// `(1/2)(C⁻+J⁻)` acting on the `p⁻` variables.
    pub fn cut_join_minus(&self) -> Self {
        self.cut_join_slot(false)
    }
}

impl<R: Ring> fmt::Debug for PSeriesFamily<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PSeriesFamily(caps={:?}, order={})", self.caps, self.order)?;
        for ((a, b), s) in &self.entries {
            writeln!(f, "  {a} {b}: {s:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct EntryOut<'a, R> {
    mu_plus: &'a Partition,
    mu_minus: &'a Partition,
    series: &'a Series<R>,
}

impl<R: Ring + Serialize> Serialize for PSeriesFamily<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a, R> {
            caps: (usize, usize),
            order: i64,
            entries: Vec<EntryOut<'a, R>>,
        }
        let entries =
            self.entries.iter().map(|((a, b), series)| EntryOut { mu_plus: a, mu_minus: b, series }).collect();
        Out { caps: self.caps, order: self.order, entries }.serialize(s)
    }
}
