//! Truncated Laurent series over finite test rings with nilpotents, the
//! unit factorization into `f0 z^n prod(1 - f_i z^i) prod(1 - f_{-j} z^{-j})`,
//! and the tame and Contou-Carrere symbols evaluated through it.
//!
//! A test ring is `Q[e_1..e_m]` modulo per-variable nilpotency orders and a
//! total-degree cutoff, so it is finite dimensional and every computation
//! terminates exactly. A Laurent series is a unit when some coefficient is
//! invertible and everything below it is nilpotent; the factorization peels
//! the finitely many nilpotent negative factors first, then normalizes the
//! positive tail degree by degree.

use crate::scalar::{pow_rat, Scalar};
use crate::Int;
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymbolError {
    #[error("series is not a unit of the Laurent ring")]
    NotAUnit,
    #[error("coefficient is not invertible in the test ring")]
    NotInvertible,
    #[error("tame symbol requires nilpotent-free coefficients")]
    NotNilpotentFree,
    #[error("truncation order too small: the value changed at higher order")]
    TruncationUnstable,
}

/// `Q[e_1..e_m] / (e_i^{orders[i]}, total degree > cutoff)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestRing<I: Scalar = Int> {
    orders: Vec<u32>,
    cutoff: u32,
    _marker: std::marker::PhantomData<I>,
}

/// Element of a test ring in reduced normal form: monomial exponent vector
/// to nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RingElement<I: Scalar = Int> {
    terms: BTreeMap<Vec<u32>, Ratio<I>>,
}

impl<I: Scalar> TestRing<I> {
    /// Ring with the given nilpotency orders; the default cutoff is the
    /// largest total degree a nonzero monomial can have.
    pub fn new(orders: Vec<u32>, cutoff: Option<u32>) -> Self {
        assert!(
            orders.iter().all(|&k| k >= 1),
            "nilpotency orders must be >= 1"
        );
        let max_total: u32 = orders.iter().map(|&k| k - 1).sum();
        TestRing {
            orders,
            cutoff: cutoff.unwrap_or(max_total).min(max_total),
            _marker: std::marker::PhantomData,
        }
    }

    /// The plain rationals.
    pub fn rational() -> Self {
        TestRing::new(Vec::new(), None)
    }

    pub fn nvars(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of iterations after which any product of nilpotents dies.
    fn nil_class(&self) -> u32 {
        self.cutoff + 1
    }

    fn reduce(&self, terms: &mut BTreeMap<Vec<u32>, Ratio<I>>) {
        terms.retain(|exps, coeff| {
            !coeff.is_zero()
                && exps.iter().zip(&self.orders).all(|(e, k)| e < k)
                && exps.iter().sum::<u32>() <= self.cutoff
        });
    }

    pub fn zero(&self) -> RingElement<I> {
        RingElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> RingElement<I> {
        self.constant(Ratio::one())
    }

    pub fn constant(&self, q: Ratio<I>) -> RingElement<I> {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(vec![0; self.nvars()], q);
        }
        RingElement { terms }
    }

    /// The nilpotent generator `e_i`.
    pub fn var(&self, i: usize) -> RingElement<I> {
        assert!(i < self.nvars());
        let mut exps = vec![0; self.nvars()];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Ratio::one());
        let mut e = RingElement { terms };
        self.reduce(&mut e.terms);
        e
    }
}

impl<I: Scalar> RingElement<I> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Ratio<I> {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Ratio::zero)
    }

    /// Invertible iff the constant term is nonzero (the ring is local).
    pub fn is_invertible(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Purely rational: no nilpotent monomials at all.
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Ratio<I>)> {
        self.terms.iter()
    }

    pub fn add(&self, ring: &TestRing<I>, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Ratio::zero);
            *entry = entry.clone() + c.clone();
        }
        ring.reduce(&mut terms);
        RingElement { terms }
    }

    pub fn neg(&self) -> Self {
        RingElement {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, ring: &TestRing<I>, rhs: &Self) -> Self {
        self.add(ring, &rhs.neg())
    }

    pub fn mul(&self, ring: &TestRing<I>, rhs: &Self) -> Self {
        // Constant factors reduce to a coefficient scaling.
        if self.terms.len() == 1 {
            if let Some((e, c)) = self.terms.iter().next() {
                if e.iter().all(|&x| x == 0) {
                    return rhs.scale(c);
                }
            }
        }
        if rhs.terms.len() == 1 {
            if let Some((e, c)) = rhs.terms.iter().next() {
                if e.iter().all(|&x| x == 0) {
                    return self.scale(c);
                }
            }
        }
        let mut terms: BTreeMap<Vec<u32>, Ratio<I>> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if exps.iter().zip(&ring.orders).any(|(e, k)| e >= k)
                    || exps.iter().sum::<u32>() > ring.cutoff
                {
                    continue;
                }
                let entry = terms.entry(exps).or_insert_with(Ratio::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        ring.reduce(&mut terms);
        RingElement { terms }
    }

    pub fn scale(&self, q: &Ratio<I>) -> Self {
        if q.is_zero() {
            return RingElement {
                terms: BTreeMap::new(),
            };
        }
        RingElement {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * q.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse in the local ring: `c(1 + n)` inverts to
    /// `c^{-1} sum (-n)^k`, a finite sum by nilpotency.
    pub fn inv(&self, ring: &TestRing<I>) -> Result<Self, SymbolError> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(SymbolError::NotInvertible);
        }
        let c_inv = c.recip();
        let unit_part = self.scale(&c_inv);
        let n = unit_part.sub(ring, &ring.one());
        let mut acc = ring.one();
        let mut pow = ring.one();
        for _ in 0..ring.nil_class() {
            pow = pow.mul(ring, &n.neg());
            if pow.is_zero() {
                break;
            }
            acc = acc.add(ring, &pow);
        }
        Ok(acc.scale(&c_inv))
    }

    /// Integer power; negative exponents require invertibility.
    pub fn pow(&self, ring: &TestRing<I>, k: i64) -> Result<Self, SymbolError> {
        let base = if k < 0 { self.inv(ring)? } else { self.clone() };
        let mut acc = ring.one();
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ring, &b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(ring, &b);
            }
        }
        Ok(acc)
    }
}

/// Laurent series truncated above `trunc`: finitely many terms, all degrees
/// at most `trunc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries<I: Scalar = Int> {
    coeffs: BTreeMap<i64, RingElement<I>>,
    trunc: i64,
}

impl<I: Scalar> LaurentSeries<I> {
    pub fn new(ring: &TestRing<I>, terms: Vec<(i64, RingElement<I>)>, trunc: i64) -> Self {
        let mut series = LaurentSeries::zero(trunc);
        for (d, c) in terms {
            if d > trunc || c.is_zero() {
                continue;
            }
            let merged = match series.coeffs.remove(&d) {
                Some(prev) => prev.add(ring, &c),
                None => c,
            };
            if !merged.is_zero() {
                series.coeffs.insert(d, merged);
            }
        }
        series
    }

    pub fn zero(trunc: i64) -> Self {
        LaurentSeries {
            coeffs: BTreeMap::new(),
            trunc,
        }
    }

    pub fn one(ring: &TestRing<I>, trunc: i64) -> Self {
        LaurentSeries::new(ring, vec![(0, ring.one())], trunc)
    }

    /// The monomial `z^k`.
    pub fn z_pow(ring: &TestRing<I>, k: i64, trunc: i64) -> Self {
        LaurentSeries::new(ring, vec![(k, ring.one())], trunc)
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn coeff(&self, d: i64) -> RingElement<I> {
        self.coeffs.get(&d).cloned().unwrap_or(RingElement {
            terms: BTreeMap::new(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &RingElement<I>)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same coefficients read at a different truncation order.
    pub fn with_trunc(&self, trunc: i64) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.retain(|d, _| *d <= trunc);
        LaurentSeries { coeffs, trunc }
    }

    pub fn add(&self, ring: &TestRing<I>, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out: Vec<(i64, RingElement<I>)> = Vec::new();
        for (d, c) in &self.coeffs {
            out.push((*d, c.clone()));
        }
        for (d, c) in &rhs.coeffs {
            out.push((*d, c.clone()));
        }
        LaurentSeries::new(ring, out, trunc)
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c.neg())).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, ring: &TestRing<I>, rhs: &Self) -> Self {
        self.add(ring, &rhs.neg())
    }

    pub fn mul(&self, ring: &TestRing<I>, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        let mut acc: BTreeMap<i64, RingElement<I>> = BTreeMap::new();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                let d = da + db;
                if d > trunc {
                    continue;
                }
                let prod = ca.mul(ring, cb);
                if prod.is_zero() {
                    continue;
                }
                match acc.get_mut(&d) {
                    Some(c) => *c = c.add(ring, &prod),
                    None => {
                        acc.insert(d, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentSeries { coeffs: acc, trunc }
    }

    /// Multiplies every coefficient by a fixed ring element.
    pub fn scale(&self, ring: &TestRing<I>, c: &RingElement<I>) -> Self {
        let mut out = LaurentSeries::zero(self.trunc);
        for (d, a) in &self.coeffs {
            let p = a.mul(ring, c);
            if !p.is_zero() {
                out.coeffs.insert(*d, p);
            }
        }
        out
    }

    /// Shifts degrees by `k` (multiplication by `z^k`), truncating above.
    pub fn shift(&self, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (d, c) in &self.coeffs {
            if d + k <= self.trunc {
                coeffs.insert(d + k, c.clone());
            }
        }
        LaurentSeries {
            coeffs,
            trunc: self.trunc,
        }
    }

    /// The substitution `z -> theta z` used by loop-rotation tests: the
    /// degree-`d` coefficient picks up `theta^d`.
    pub fn compose_scale(&self, theta: &Ratio<I>) -> Self {
        assert!(!theta.is_zero());
        let mut out = LaurentSeries::zero(self.trunc);
        for (d, c) in &self.coeffs {
            out.coeffs.insert(*d, c.scale(&pow_rat(theta, *d)));
        }
        out
    }

    /// The valuation data of a unit: the smallest degree with invertible
    /// coefficient, which may dominate only nilpotent coefficients.
    pub fn unit_data(&self) -> Result<(i64, RingElement<I>), SymbolError> {
        let mut lead: Option<(i64, RingElement<I>)> = None;
        for (d, c) in &self.coeffs {
            if c.is_invertible() {
                lead = Some((*d, c.clone()));
                break;
            }
            if !c.is_nilpotent() {
                return Err(SymbolError::NotAUnit);
            }
        }
        let Some((val, leading)) = lead else {
            return Err(SymbolError::NotAUnit);
        };
        Ok((val, leading))
    }

    /// Multiplicative inverse of a unit, exact to the truncation order.
    pub fn inv(&self, ring: &TestRing<I>) -> Result<Self, SymbolError> {
        let (val, lead) = self.unit_data()?;
        let lead_inv = lead.inv(ring)?;
        // u = lead^{-1} z^{-val} f = 1 + m with m killed by nilpotency and
        // truncation; sum the finite geometric series for u^{-1}.
        let u = self.shift(-val).scale(ring, &lead_inv);
        let m = u.sub(ring, &LaurentSeries::one(ring, self.trunc));
        let minus_m = m.neg();
        let mut acc = LaurentSeries::one(ring, self.trunc);
        let mut pow = LaurentSeries::one(ring, self.trunc);
        let mut guard = 0u32;
        loop {
            pow = pow.mul(ring, &minus_m);
            if pow.is_zero() {
                break;
            }
            acc = acc.add(ring, &pow);
            guard += 1;
            assert!(guard < 10_000, "geometric inverse failed to terminate");
        }
        Ok(acc.scale(ring, &lead_inv).shift(-val))
    }
}

/// Division by `1 - c z^k` as the linear recurrence `w[d] = v[d] + c w[d-k]`,
/// one ring multiplication per degree. For `k < 0` the recurrence runs
/// downward and terminates through nilpotency of `c`.
fn divide_one_minus<I: Scalar>(
    ring: &TestRing<I>,
    v: &LaurentSeries<I>,
    k: i64,
    c: &RingElement<I>,
) -> LaurentSeries<I> {
    debug_assert!(k != 0);
    let trunc = v.trunc;
    let Some(low) = v.coeffs.keys().next().copied() else {
        return LaurentSeries::zero(trunc);
    };
    let mut out: BTreeMap<i64, RingElement<I>> = BTreeMap::new();
    if k > 0 {
        for d in low..=trunc {
            let prev = out.get(&(d - k));
            let mut w = v.coeff(d);
            if let Some(p) = prev {
                w = w.add(ring, &c.mul(ring, p));
            }
            if !w.is_zero() {
                out.insert(d, w);
            }
        }
    } else {
        debug_assert!(c.is_nilpotent());
        let floor = low - (-k) * (ring.nil_class() as i64 + 1);
        for d in (floor..=trunc).rev() {
            let prev = out.get(&(d - k));
            let mut w = v.coeff(d);
            if let Some(p) = prev {
                w = w.add(ring, &c.mul(ring, p));
            }
            if !w.is_zero() {
                out.insert(d, w);
            }
        }
        debug_assert!(
            !out.keys().next().is_some_and(|d| *d < floor),
            "nilpotent recurrence escaped its floor"
        );
    }
    LaurentSeries { coeffs: out, trunc }
}

/// The shape `f0 z^n prod_{i>=1}(1 - pos_i z^i) prod_{j>=1}(1 - neg_j z^{-j})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitFactorization<I: Scalar = Int> {
    pub unit: RingElement<I>,
    pub valuation: i64,
    pub pos: BTreeMap<i64, RingElement<I>>,
    pub neg: BTreeMap<i64, RingElement<I>>,
    trunc: i64,
}

impl<I: Scalar> UnitFactorization<I> {
    pub fn new(
        unit: RingElement<I>,
        valuation: i64,
        pos: BTreeMap<i64, RingElement<I>>,
        neg: BTreeMap<i64, RingElement<I>>,
        trunc: i64,
    ) -> Self {
        UnitFactorization {
            unit,
            valuation,
            pos,
            neg,
            trunc,
        }
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }
}

/// Factorizes a unit Laurent series into the canonical product shape.
///
/// The negative part is peeled by a fixed-point iteration that repeatedly
/// absorbs the lowest surviving negative coefficient into its factor slot;
/// nilpotency of the test ring forces termination. The positive part is
/// then cleared degree by degree.
///
/// The computation runs at a raised internal truncation: negative factors
/// pull high-degree products back down, so positive factors beyond the
/// nominal order are needed for the recomposition to reproduce the input
/// exactly. The returned factorization carries that working order.
pub fn factorize<I: Scalar>(
    ring: &TestRing<I>,
    f: &LaurentSeries<I>,
) -> Result<UnitFactorization<I>, SymbolError> {
    let (val, lead) = f.unit_data()?;
    // Headroom: degree loss from shifting a negative valuation plus the
    // maximal pull-down reach of nilpotent negative factors.
    let low = f
        .coeffs
        .keys()
        .next()
        .map(|d| (*d).min(0).unsigned_abs())
        .unwrap_or(0) as i64;
    let reach = low * (ring.nil_class() as i64 + 1) + 4;
    let trunc = f.trunc() + val.abs() + reach;
    let f = f.with_trunc(trunc);
    let lead_inv = lead.inv(ring)?;
    let u = f.shift(-val).scale(ring, &lead_inv);

    let one = LaurentSeries::one(ring, trunc);
    let mut neg: BTreeMap<i64, RingElement<I>> = BTreeMap::new();
    let mut residual = u.clone();
    let mut guard = 0u32;
    loop {
        // residual = u / prod_j (1 - neg_j z^{-j}).
        let lowest = residual
            .coeffs
            .iter()
            .find(|(d, _)| **d < 0)
            .map(|(d, c)| (*d, c.clone()));
        let Some((d, c)) = lowest else { break };
        if !c.is_nilpotent() {
            return Err(SymbolError::NotAUnit);
        }
        let j = -d;
        let slot = neg.entry(j).or_insert_with(|| ring.zero());
        *slot = slot.sub(ring, &c);
        neg.retain(|_, v| !v.is_zero());
        residual = u.clone();
        for (jj, cc) in &neg {
            residual = divide_one_minus(ring, &residual, -jj, cc);
        }
        guard += 1;
        assert!(guard < 10_000, "negative-part peeling failed to terminate");
    }

    // Dividing off the negative factors can leave a nilpotent shift at
    // degree zero; fold it into the unit.
    let c0 = residual.coeff(0);
    debug_assert!(c0.is_invertible());
    let unit = lead.mul(ring, &c0);
    let mut v = residual.scale(ring, &c0.inv(ring)?);

    // Clear positive degrees bottom-up; each factor is 1 mod z^i, so earlier
    // degrees stay cleared.
    let mut pos: BTreeMap<i64, RingElement<I>> = BTreeMap::new();
    for i in 1..=trunc.max(0) {
        let c = v.coeff(i);
        if c.is_zero() {
            continue;
        }
        let r = c.neg();
        v = divide_one_minus(ring, &v, i, &r);
        pos.insert(i, r);
    }
    debug_assert!(v == one, "positive sweep must exhaust the residual");
    Ok(UnitFactorization {
        unit,
        valuation: val,
        pos,
        neg,
        trunc,
    })
}

/// Expands the product shape back into a series, exact to the truncation.
pub fn recompose<I: Scalar>(ring: &TestRing<I>, fact: &UnitFactorization<I>) -> LaurentSeries<I> {
    let trunc = fact.trunc;
    let one = LaurentSeries::one(ring, trunc);
    let mut acc = LaurentSeries::new(ring, vec![(fact.valuation, fact.unit.clone())], trunc);
    for (i, c) in &fact.pos {
        let factor = one.sub(
            ring,
            &LaurentSeries::new(ring, vec![(*i, c.clone())], trunc),
        );
        acc = acc.mul(ring, &factor);
    }
    for (j, c) in &fact.neg {
        let factor = one.sub(
            ring,
            &LaurentSeries::new(ring, vec![(-*j, c.clone())], trunc),
        );
        acc = acc.mul(ring, &factor);
    }
    acc
}

/// The tame symbol `(-1)^{nm} f0^m / g0^n` of two units with purely rational
/// coefficients.
pub fn tame_symbol<I: Scalar>(
    ring: &TestRing<I>,
    f: &LaurentSeries<I>,
    g: &LaurentSeries<I>,
) -> Result<Ratio<I>, SymbolError> {
    for s in [f, g] {
        if s.coeffs.values().any(|c| !c.is_rational()) {
            return Err(SymbolError::NotNilpotentFree);
        }
    }
    let ff = factorize(ring, f)?;
    let gg = factorize(ring, g)?;
    let f0 = ff.unit.constant_term();
    let g0 = gg.unit.constant_term();
    let n = ff.valuation;
    let m = gg.valuation;
    let mut out = pow_rat(&f0, m) / pow_rat(&g0, n);
    if (n * m) % 2 != 0 {
        out = -out;
    }
    Ok(out)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn cc_from_factorizations<I: Scalar>(
    ring: &TestRing<I>,
    ff: &UnitFactorization<I>,
    gg: &UnitFactorization<I>,
) -> Result<RingElement<I>, SymbolError> {
    let n = ff.valuation;
    let m = gg.valuation;
    let mut out = ff.unit.pow(ring, m)?.mul(ring, &gg.unit.pow(ring, -n)?);
    if (n * m) % 2 != 0 {
        out = out.neg();
    }
    // Positive factors of f against negative factors of g.
    for (i, fi) in &ff.pos {
        for (j, gj) in &gg.neg {
            let d = gcd_i64(*i, *j);
            let x = fi.pow(ring, j / d)?.mul(ring, &gj.pow(ring, i / d)?);
            let factor = ring.one().sub(ring, &x).pow(ring, d)?;
            out = out.mul(ring, &factor);
        }
    }
    // Positive factors of g against negative factors of f, inverted.
    for (i, gi) in &gg.pos {
        for (j, fj) in &ff.neg {
            let d = gcd_i64(*i, *j);
            let x = gi.pow(ring, j / d)?.mul(ring, &fj.pow(ring, i / d)?);
            let factor = ring.one().sub(ring, &x).pow(ring, -d)?;
            out = out.mul(ring, &factor);
        }
    }
    Ok(out)
}

/// The Contou-Carrere symbol of two units. Recomputed at truncation `+2` to
/// certify that the value has stabilized; a change reports
/// `TruncationUnstable`.
pub fn cc_symbol<I: Scalar>(
    ring: &TestRing<I>,
    f: &LaurentSeries<I>,
    g: &LaurentSeries<I>,
) -> Result<RingElement<I>, SymbolError> {
    let value = cc_from_factorizations(ring, &factorize(ring, f)?, &factorize(ring, g)?)?;
    let f2 = f.with_trunc(f.trunc() + 2);
    let g2 = g.with_trunc(g.trunc() + 2);
    let check = cc_from_factorizations(ring, &factorize(ring, &f2)?, &factorize(ring, &g2)?)?;
    if value != check {
        return Err(SymbolError::TruncationUnstable);
    }
    Ok(value)
}

/// The Steinberg relation for the tame symbol: `{f, 1-f} = 1` whenever both
/// sides are units.
pub fn steinberg_check<I: Scalar>(
    ring: &TestRing<I>,
    f: &LaurentSeries<I>,
) -> Result<bool, SymbolError> {
    let one_minus = LaurentSeries::one(ring, f.trunc()).sub(ring, f);
    Ok(tame_symbol(ring, f, &one_minus)?.is_one())
}

/// Sets every nilpotent to zero, keeping constant terms.
pub fn specialize_series<I: Scalar>(ring: &TestRing<I>, f: &LaurentSeries<I>) -> LaurentSeries<I> {
    let terms: Vec<(i64, RingElement<I>)> = f
        .coeffs
        .iter()
        .map(|(d, c)| (*d, ring.constant(c.constant_term())))
        .collect();
    LaurentSeries::new(ring, terms, f.trunc())
}
