use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgError;

pub type Rational = BigRational;

/// Indeterminates of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    C,
    R,
    Alpha,
    S1,
    S2,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::C, Var::R, Var::Alpha, Var::S1, Var::S2];

    fn slot(self) -> usize {
        match self {
            Var::C => 0,
            Var::R => 1,
            Var::Alpha => 2,
            Var::S1 => 3,
            Var::S2 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::C => "c",
            Var::R => "r",
            Var::Alpha => "alpha",
            Var::S1 => "s1",
            Var::S2 => "s2",
        }
    }

    /// `c`, `r` and `alpha` are constants of the geometry; `s1`, `s2` are functions.
    pub fn is_parameter(self) -> bool {
        matches!(self, Var::C | Var::R | Var::Alpha)
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "c" => Some(Var::C),
            "r" => Some(Var::R),
            "alpha" | "α" => Some(Var::Alpha),
            "s1" | "σ1" => Some(Var::S1),
            "s2" | "σ2" => Some(Var::S2),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which relations are active on a scalar.
///
/// `Generic` leaves `c` free. `Alpha` eliminates `c = -3 - alpha^2` and
/// rewrites `s2^2 = alpha^2 - s1^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Context {
    Generic,
    Alpha,
}

impl Context {
    /// The indeterminate `v` read in this context. In the alpha context `c`
    /// denotes `-3 - alpha^2`.
    pub fn var(self, v: Var) -> Result<ParamScalar, AlgError> {
        match (self, v) {
            (Context::Alpha, Var::C) => Ok(ParamScalar::c_in_alpha()),
            (Context::Generic, Var::Alpha) => Err(AlgError::ContextMismatch),
            _ => Ok(ParamScalar::monomial_in(Some(self), Monomial::var(v, 1), Rational::one())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Context::Generic => "generic",
            Context::Alpha => "alpha",
        }
    }
}

pub(crate) fn merge_ctx(a: Option<Context>, b: Option<Context>) -> Result<Option<Context>, AlgError> {
    match (a, b) {
        (None, x) | (x, None) => Ok(x),
        (Some(x), Some(y)) if x == y => Ok(Some(x)),
        _ => Err(AlgError::ContextMismatch),
    }
}

/// Exponent vector over `(c, r, alpha, s1, s2)`; only `alpha` may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([i32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var, exp: i32) -> Monomial {
        let mut e = [0; 5];
        e[v.slot()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.slot()]
    }

    fn with_exp(mut self, v: Var, exp: i32) -> Monomial {
        self.0[v.slot()] = exp;
        self
    }

    pub fn times(self, other: Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.exp(v) != 0
    }

    fn total_degree(&self) -> i32 {
        self.0.iter().sum()
    }
}

type Terms = BTreeMap<Monomial, Rational>;

fn add_term(terms: &mut Terms, m: Monomial, coef: Rational) {
    if coef.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coef);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coef;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn terms_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.times(*mb), ca * cb);
        }
    }
    out
}

fn terms_pow(base: &Terms, exp: u32) -> Terms {
    let mut acc = Terms::new();
    acc.insert(Monomial::ONE, Rational::one());
    for _ in 0..exp {
        acc = terms_mul(&acc, base);
    }
    acc
}

/// A polynomial that has not been brought to canonical form.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RawPoly {
    terms: Terms,
}

impl RawPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: Monomial, coef: Rational) {
        add_term(&mut self.terms, m, coef);
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = RawPoly::new();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn mul(&self, other: &RawPoly) -> RawPoly {
        RawPoly { terms: terms_mul(&self.terms, &other.terms) }
    }

    pub fn add(&self, other: &RawPoly) -> RawPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }
}

/// Element of the coefficient ring `Q[c, r, s1, s2][alpha, alpha^-1]`, kept in
/// canonical form for the relations of its context.
#[derive(Clone, Debug)]
pub struct ParamScalar {
    ctx: Option<Context>,
    terms: Terms,
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for ParamScalar {}

impl Default for ParamScalar {
    fn default() -> Self {
        ParamScalar::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { ctx: None, terms: Terms::new() }
    }

    pub fn one() -> Self {
        ParamScalar::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::ONE, q);
        ParamScalar { ctx: None, terms }
    }

    pub fn int(n: i64) -> Self {
        ParamScalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        ParamScalar::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The symbolic parameter `c` (generic context).
    pub fn c() -> Self {
        Context::Generic.var(Var::C).expect("c is valid in the generic context")
    }

    /// The symbolic Okumura parameter `r`; valid in every context.
    pub fn r() -> Self {
        ParamScalar::monomial_in(None, Monomial::var(Var::R, 1), Rational::one())
    }

    pub fn alpha() -> Self {
        Context::Alpha.var(Var::Alpha).expect("alpha is valid in the alpha context")
    }

    pub fn s1() -> Self {
        Context::Alpha.var(Var::S1).expect("s1 is valid in the alpha context")
    }

    pub fn s2() -> Self {
        Context::Alpha.var(Var::S2).expect("s2 is valid in the alpha context")
    }

    /// `-3 - alpha^2`, the value of `c` once it is eliminated.
    pub fn c_in_alpha() -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::ONE, Rational::from_integer((-3).into()));
        add_term(&mut terms, Monomial::var(Var::Alpha, 2), -Rational::one());
        ParamScalar { ctx: Some(Context::Alpha), terms }
    }

    pub(crate) fn monomial_in(ctx: Option<Context>, m: Monomial, coef: Rational) -> Self {
        let mut raw = RawPoly::new();
        raw.add_term(m, coef);
        match ctx {
            Some(ctx) => ParamScalar::reduce(&raw, ctx),
            None => ParamScalar { ctx: None, terms: raw.terms }.normalized(),
        }
    }

    /// Canonical form of `raw` under the relations active in `ctx`. Idempotent.
    pub fn reduce(raw: &RawPoly, ctx: Context) -> ParamScalar {
        let terms = match ctx {
            Context::Generic => raw.terms.clone(),
            Context::Alpha => reduce_alpha(&raw.terms),
        };
        ParamScalar { ctx: Some(ctx), terms }.normalized()
    }

    pub fn to_raw(&self) -> RawPoly {
        RawPoly { terms: self.terms.clone() }
    }

    /// Forget the context when nothing context-sensitive remains.
    fn normalized(mut self) -> Self {
        let sensitive = self
            .terms
            .keys()
            .any(|m| m.mentions(Var::C) || m.mentions(Var::Alpha) || m.mentions(Var::S1) || m.mentions(Var::S2));
        if !sensitive {
            self.ctx = None;
        }
        self
    }

    pub fn context(&self) -> Option<Context> {
        self.ctx
    }

    /// Re-express in the alpha context, substituting `c = -3 - alpha^2`.
    pub fn to_alpha(&self) -> ParamScalar {
        ParamScalar::reduce(&self.to_raw(), Context::Alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The value when the scalar is a plain rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.mentions(v))
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.mentions(*v)).collect()
    }

    /// True when only parameters (no `s1`, `s2`) occur.
    pub fn is_parameter_only(&self) -> bool {
        !self.mentions(Var::S1) && !self.mentions(Var::S2)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn try_add(&self, other: &ParamScalar) -> Result<ParamScalar, AlgError> {
        let ctx = merge_ctx(self.ctx, other.ctx)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Ok(ParamScalar { ctx, terms }.normalized())
    }

    pub fn try_sub(&self, other: &ParamScalar) -> Result<ParamScalar, AlgError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &ParamScalar) -> Result<ParamScalar, AlgError> {
        let ctx = merge_ctx(self.ctx, other.ctx)?;
        let terms = terms_mul(&self.terms, &other.terms);
        let terms = match ctx {
            Some(Context::Alpha) => reduce_alpha(&terms),
            _ => terms,
        };
        Ok(ParamScalar { ctx, terms }.normalized())
    }

    fn neg_ref(&self) -> ParamScalar {
        ParamScalar { ctx: self.ctx, terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }

    pub fn scale(&self, q: &Rational) -> ParamScalar {
        if q.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar { ctx: self.ctx, terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect() }
    }

    pub fn pow(&self, exp: u32) -> ParamScalar {
        let mut acc = ParamScalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// A unit is a nonzero rational multiple of a power of `alpha`.
    pub fn is_unit(&self) -> bool {
        self.unit_parts().is_some()
    }

    fn unit_parts(&self) -> Option<(Rational, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let a = m.exp(Var::Alpha);
        m.with_exp(Var::Alpha, 0).is_one().then(|| (c.clone(), a))
    }

    pub fn inverse(&self) -> Result<ParamScalar, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let (q, a) = self.unit_parts().ok_or_else(|| AlgError::NonUnitDivisor(self.to_string()))?;
        Ok(ParamScalar::monomial_in(self.ctx, Monomial::var(Var::Alpha, -a), q.recip()))
    }

    /// Exact division; the divisor must be a unit.
    pub fn try_div(&self, other: &ParamScalar) -> Result<ParamScalar, AlgError> {
        self.try_mul(&other.inverse()?)
    }

    /// Sign of a unit, taking `alpha > 0`.
    pub fn unit_sign(&self) -> Option<i8> {
        self.unit_parts().map(|(q, _)| if q.is_positive() { 1 } else { -1 })
    }

    /// Sign of a rational scalar.
    pub fn rational_sign(&self) -> Option<i8> {
        self.as_rational().map(|q| {
            if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }
        })
    }

    /// `self == q * other` for a rational `q`; returns `q`.
    pub fn rational_multiple_of(&self, other: &ParamScalar) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let (m, c) = other.terms.iter().next_back().unwrap();
        let q = self.terms.get(m)? / c;
        (other.scale(&q) == *self).then_some(q)
    }

    /// Exact value under `assignment`, which must respect the active relations.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rational, AlgError> {
        if self.ctx == Some(Context::Alpha) || self.mentions(Var::S1) || self.mentions(Var::S2) {
            assignment.check_relations()?;
        }
        let mut total = Rational::zero();
        for (m, coef) in &self.terms {
            let mut term = coef.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let value = assignment.get(v).ok_or(AlgError::MissingParameter(v))?;
                term *= rational_pow(value, e)?;
            }
            total += term;
        }
        Ok(total)
    }

    /// Replace the indeterminate `v` by `value`. Negative powers of `alpha`
    /// need `value` to be a unit.
    pub fn substitute(&self, v: Var, value: &ParamScalar) -> Result<ParamScalar, AlgError> {
        if !self.mentions(v) {
            return Ok(self.clone());
        }
        let ctx = if v == Var::C && value.ctx == Some(Context::Alpha) {
            Some(Context::Alpha)
        } else {
            merge_ctx(self.ctx, value.ctx)?
        };
        let inv = if self.terms.keys().any(|m| m.exp(v) < 0) { Some(value.inverse()?) } else { None };
        let mut acc = ParamScalar { ctx, terms: Terms::new() };
        let mut cache: BTreeMap<i32, ParamScalar> = BTreeMap::new();
        for (m, coef) in &self.terms {
            let e = m.exp(v);
            let power = cache
                .entry(e)
                .or_insert_with(|| {
                    if e >= 0 {
                        value.pow(e as u32)
                    } else {
                        inv.as_ref().expect("inverse computed").pow((-e) as u32)
                    }
                })
                .clone();
            let rest = ParamScalar { ctx, terms: Terms::from([(m.with_exp(v, 0), coef.clone())]) };
            acc = acc.try_add(&rest.try_mul(&power)?)?;
        }
        let out = match ctx {
            Some(c) => ParamScalar::reduce(&acc.to_raw(), c),
            None => acc.normalized(),
        };
        Ok(out)
    }

    /// Substitute every assigned indeterminate; unassigned ones stay symbolic.
    pub fn instantiate_partial(&self, assignment: &Assignment) -> Result<ParamScalar, AlgError> {
        assignment.check_relations()?;
        let mut out = self.clone();
        for (v, q) in assignment.iter() {
            out = out.substitute(v, &ParamScalar::from_rational(q.clone()))?;
        }
        Ok(out)
    }

    fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ordered: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.total_degree().cmp(&a.total_degree()).then(b.cmp(a)));
        let mut out = String::new();
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn rational_pow(value: &Rational, e: i32) -> Result<Rational, AlgError> {
    if e < 0 && value.is_zero() {
        return Err(AlgError::DivisionByZero);
    }
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= value;
    }
    Ok(if e < 0 { acc.recip() } else { acc })
}

fn reduce_alpha(terms: &Terms) -> Terms {
    let needs = terms.keys().any(|m| m.exp(Var::C) != 0 || m.exp(Var::S2) >= 2);
    if !needs {
        return terms.clone();
    }
    let c_value: Terms = Terms::from([
        (Monomial::ONE, Rational::from_integer((-3).into())),
        (Monomial::var(Var::Alpha, 2), -Rational::one()),
    ]);
    let s2_sq: Terms =
        Terms::from([(Monomial::var(Var::Alpha, 2), Rational::one()), (Monomial::var(Var::S1, 2), -Rational::one())]);
    let mut out = Terms::new();
    for (m, coef) in terms {
        let ce = m.exp(Var::C) as u32;
        let se = m.exp(Var::S2) as u32;
        let base = m.with_exp(Var::C, 0).with_exp(Var::S2, (se % 2) as i32);
        let mut piece = Terms::from([(base, coef.clone())]);
        if ce > 0 {
            piece = terms_mul(&piece, &terms_pow(&c_value, ce));
        }
        if se >= 2 {
            piece = terms_mul(&piece, &terms_pow(&s2_sq, se / 2));
        }
        for (pm, pc) in piece {
            add_term(&mut out, pm, pc);
        }
    }
    out
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for ParamScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::int(n)
    }
}

impl From<Rational> for ParamScalar {
    fn from(q: Rational) -> Self {
        ParamScalar::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $method(self, rhs: &ParamScalar) -> ParamScalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}: `{self}` vs `{rhs}`"))
            }
        }
        impl $trait<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $method(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $method(self, rhs: &ParamScalar) -> ParamScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $method(self, rhs: ParamScalar) -> ParamScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        self.neg_ref()
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        self.neg_ref()
    }
}

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: ParamScalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for ParamScalar {
    fn sum<I: Iterator<Item = ParamScalar>>(iter: I) -> Self {
        iter.fold(ParamScalar::zero(), |acc, x| acc + x)
    }
}

/// Rational values for indeterminates.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment(BTreeMap<Var, Rational>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, q: Rational) -> Self {
        self.0.insert(v, q);
        self
    }

    pub fn with_int(self, v: Var, n: i64) -> Self {
        self.with(v, Rational::from_integer(n.into()))
    }

    pub fn insert(&mut self, v: Var, q: Rational) {
        self.0.insert(v, q);
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.0.get(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &Rational)> {
        self.0.iter().map(|(v, q)| (*v, q))
    }

    /// `s1^2 + s2^2 = alpha^2`, `c = -3 - alpha^2` and `alpha != 0`,
    /// each checked when all of its indeterminates are assigned.
    pub fn check_relations(&self) -> Result<(), AlgError> {
        let get = |v| self.0.get(&v);
        if let Some(a) = get(Var::Alpha) {
            if a.is_zero() {
                return Err(AlgError::RelationViolation("alpha must be nonzero".into()));
            }
            if let (Some(s1), Some(s2)) = (get(Var::S1), get(Var::S2)) {
                if s1 * s1 + s2 * s2 != a * a {
                    return Err(AlgError::RelationViolation(format!(
                        "s1^2 + s2^2 = {} but alpha^2 = {}",
                        s1 * s1 + s2 * s2,
                        a * a
                    )));
                }
            }
            if let Some(c) = get(Var::C) {
                let expected = Rational::from_integer((-3).into()) - a * a;
                if *c != expected {
                    return Err(AlgError::RelationViolation(format!("c = {c} but -3 - alpha^2 = {expected}")));
                }
            }
        }
        Ok(())
    }
}
