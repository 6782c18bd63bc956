//! Prime ideals of quadratic rings of integers: splitting of rational
//! primes, ideal powers as Z-module bases in Hermite normal form, exact
//! p-adic valuations, factorisation of principal ideals, and
//! principal-generator searches via lattice reduction.
//!
//! Everything is indexed on the integral basis `(1, omega)` where `omega` is
//! `sqrt(D)` or `(1 + sqrt(D))/2`, so ideals are plain rank-2 Z-modules and
//! membership tests are two divisibility checks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::numeric::{units_of, Field, FieldElem, QuadField, Rat};

/// How a rational prime decomposes in a quadratic field (or that it is a
/// prime of Q itself).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitKind {
    /// A prime of Q (no extension involved).
    Rational,
    /// p O_K = P1 * P2 with distinct conjugate primes.
    Split,
    /// p O_K stays prime (residue degree 2).
    Inert,
    /// p O_K = P^2.
    Ramified,
}

impl SplitKind {
    fn as_str(&self) -> &'static str {
        match self {
            SplitKind::Rational => "rational",
            SplitKind::Split => "split",
            SplitKind::Inert => "inert",
            SplitKind::Ramified => "ramified",
        }
    }
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Z-module basis of an ideal in Hermite normal form.
///
/// The module is spanned by `(a, 0)` and `(b, c)` in coordinates on
/// `(1, omega)`, with `a, c > 0` and `0 <= b < a`; its index in the full
/// ring (the ideal norm) is `a * c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

/// Product of two ring elements given as integer coordinates on `(1, omega)`,
/// using `omega^2 = t*omega - n` with `t` the trace and `n` the norm of omega.
fn omega_mul(k: QuadField, x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let t = BigInt::from(k.omega_trace());
    let n = BigInt::from(k.omega_norm());
    let z0 = &x.0 * &y.0 - &n * (&x.1 * &y.1);
    let z1 = &x.0 * &y.1 + &x.1 * &y.0 + &t * (&x.1 * &y.1);
    (z0, z1)
}

impl IdealBasis {
    /// The unit ideal (the full ring of integers).
    pub fn full_ring() -> IdealBasis {
        IdealBasis {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
        }
    }

    /// Hermite normal form of the Z-module generated by the given coordinate
    /// vectors. The module must have full rank (always true for nonzero
    /// ideals).
    pub fn from_generators(gens: &[(BigInt, BigInt)]) -> IdealBasis {
        // Combine second coordinates down to their gcd.
        let mut v = (BigInt::zero(), BigInt::zero());
        for g in gens {
            if g.1.is_zero() {
                continue;
            }
            if v.1.is_zero() {
                v = g.clone();
                continue;
            }
            let e = v.1.extended_gcd(&g.1);
            v = (&e.x * &v.0 + &e.y * &g.0, e.gcd);
        }
        assert!(!v.1.is_zero(), "ideal basis needs full rank");
        if v.1.is_negative() {
            v = (-v.0, -v.1);
        }
        let c = v.1.clone();
        // Clear second coordinates and gather the rank-1 part.
        let mut a = BigInt::zero();
        for g in gens {
            let reduced = &g.0 - (&g.1 / &c) * &v.0;
            a = a.gcd(&reduced);
        }
        assert!(!a.is_zero(), "ideal basis needs full rank");
        let b = v.0.mod_floor(&a);
        IdealBasis { a, b, c }
    }

    /// Membership test for integer coordinates on `(1, omega)`.
    pub fn contains(&self, x0: &BigInt, x1: &BigInt) -> bool {
        if !(x1 % &self.c).is_zero() {
            return false;
        }
        let q = x1 / &self.c;
        ((x0 - q * &self.b) % &self.a).is_zero()
    }

    /// Ideal norm (index in the ring of integers).
    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    /// Ideal product, back in Hermite normal form.
    pub fn mul(&self, other: &IdealBasis, k: QuadField) -> IdealBasis {
        let mine = [
            (self.a.clone(), BigInt::zero()),
            (self.b.clone(), self.c.clone()),
        ];
        let theirs = [
            (other.a.clone(), BigInt::zero()),
            (other.b.clone(), other.c.clone()),
        ];
        let mut gens = Vec::with_capacity(4);
        for x in &mine {
            for y in &theirs {
                gens.push(omega_mul(k, x, y));
            }
        }
        IdealBasis::from_generators(&gens)
    }
}

/// A maximal ideal: a prime of Q, or a prime of a quadratic ring of
/// integers above the rational prime `p`.
#[derive(Debug, Clone)]
pub struct PrimeIdeal {
    field: Field,
    p: u64,
    kind: SplitKind,
    pi: FieldElem,
    unif: FieldElem,
    e: u8,
    f: u8,
    basis: Option<IdealBasis>,
    /// Image of omega in the residue field, when that field is F_p.
    omega_res: u64,
}

impl PrimeIdeal {
    /// The prime `(p)` of Q.
    pub fn rational(p: u64) -> Result<PrimeIdeal> {
        if !arith::is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeIdeal {
            field: Field::Rational,
            p,
            kind: SplitKind::Rational,
            pi: FieldElem::from_int(p as i64),
            unif: FieldElem::from_int(p as i64),
            e: 1,
            f: 1,
            basis: None,
            omega_res: 0,
        })
    }

    /// The base field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// The rational prime below this ideal (also the residue characteristic).
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Splitting behaviour of `p`.
    pub fn kind(&self) -> SplitKind {
        self.kind
    }

    /// Conventional second generator: the ideal is `(p, pi)`. Note that
    /// `pi` need not have valuation one (e.g. when the square of a split
    /// prime is principal with this very generator); algorithms that need a
    /// uniformiser should call [`PrimeIdeal::uniformiser`].
    pub fn pi(&self) -> &FieldElem {
        &self.pi
    }

    /// An element of valuation exactly one at this prime.
    pub fn uniformiser(&self) -> &FieldElem {
        &self.unif
    }

    /// Ramification index.
    pub fn e(&self) -> u8 {
        self.e
    }

    /// Residue degree; the residue field has `p^f` elements.
    pub fn f(&self) -> u8 {
        self.f
    }

    /// Hermite-form Z-basis (absent over Q).
    pub fn basis(&self) -> Option<&IdealBasis> {
        self.basis.as_ref()
    }

    /// Image of omega in the residue field when `f = 1`.
    pub fn omega_residue(&self) -> u64 {
        self.omega_res
    }

    /// Sort/identity key: primes above the same `p` differ in `omega_res`.
    fn key(&self) -> (u64, u64, u8) {
        (self.p, self.omega_res, self.f)
    }
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.key() == other.key()
    }
}

impl Eq for PrimeIdeal {}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SplitKind::Rational | SplitKind::Inert => write!(f, "({})", self.p),
            _ => write!(f, "({}, {})", self.p, self.pi),
        }
    }
}

impl Serialize for PrimeIdeal {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let quadratic = !matches!(self.kind, SplitKind::Rational);
        let mut map = ser.serialize_map(Some(if quadratic { 3 } else { 1 }))?;
        map.serialize_entry("p", &self.p)?;
        if quadratic {
            map.serialize_entry("kind", self.kind.as_str())?;
            map.serialize_entry("pi", &self.pi)?;
        }
        map.end()
    }
}

/// Decomposes the rational prime `p` in the given field.
///
/// Over Q this returns the single prime `(p)`. Over a quadratic field the
/// primes above `p` are returned with two-element generators `(p, pi)`,
/// ordered deterministically; each `pi` is verified to be a uniformiser.
pub fn split_prime(field: Field, p: u64) -> Result<Vec<PrimeIdeal>> {
    if !arith::is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let k = match field {
        Field::Rational => return Ok(vec![PrimeIdeal::rational(p)?]),
        Field::Quadratic(k) => k,
    };
    let d = k.radicand();
    let kelem = |a: i64, b: i64| FieldElem::new(k, crate::numeric::rat(a), crate::numeric::rat(b));

    let make = |kind: SplitKind, pi: FieldElem, e: u8, f: u8, omega_res: u64| -> PrimeIdeal {
        // Ramified second generators and inert `p` always have valuation
        // one; a split generator may not (its conjugate-free part can sit in
        // a higher power), so correct it there.
        let unif = match kind {
            SplitKind::Split => fix_uniformiser(pi.clone(), p),
            _ => pi.clone(),
        };
        let mut prime = PrimeIdeal {
            field,
            p,
            kind,
            pi,
            unif,
            e,
            f,
            basis: None,
            omega_res,
        };
        prime.basis = Some(basis_of_prime(&prime, k));
        prime
    };

    if p == 2 {
        return Ok(match d.rem_euclid(8) {
            // D even: ramified with uniformiser sqrt(D).
            2 | 6 => vec![make(SplitKind::Ramified, FieldElem::sqrt_d(k), 2, 1, 0)],
            // D = 3 mod 4: ramified with uniformiser 1 + sqrt(D).
            3 | 7 => vec![make(SplitKind::Ramified, kelem(1, 1), 2, 1, 1)],
            // D = 1 mod 8: split; omega = (1+sqrt(D))/2 has minimal polynomial
            // x^2 - x + (1-D)/4 = x(x-1) mod 2.
            1 => {
                let mut out = Vec::new();
                for root in [0i64, 1] {
                    let pi = FieldElem::omega(k).sub(&FieldElem::from_int(root)).unwrap();
                    out.push(make(SplitKind::Split, pi, 1, 1, root as u64));
                }
                out
            }
            // D = 5 mod 8: inert.
            _ => vec![make(SplitKind::Inert, FieldElem::int_in(field, 2), 1, 2, 0)],
        });
    }

    // Odd p.
    if d.rem_euclid(p as i64) == 0 {
        // Ramified with uniformiser sqrt(D); omega maps to 0 resp. 1/2.
        let omega_res = if k.omega_is_half() { (p + 1) / 2 % p } else { 0 };
        return Ok(vec![make(
            SplitKind::Ramified,
            FieldElem::sqrt_d(k),
            2,
            1,
            omega_res,
        )]);
    }
    let dmod = (d.rem_euclid(p as i64)) as u64;
    let mut roots: Vec<u64> = (1..p).filter(|r| r * r % p == dmod).collect();
    if roots.is_empty() {
        return Ok(vec![make(
            SplitKind::Inert,
            FieldElem::int_in(field, p as i64),
            1,
            2,
            0,
        )]);
    }
    roots.sort_unstable();
    let mut out = Vec::new();
    for c in roots {
        // The ideal (p, sqrt(D) + c): sqrt(D) = -c in its residue field.
        let pi = kelem(c as i64, 1);
        let sqrt_res = p - c;
        let omega_res = if k.omega_is_half() {
            // omega = (1 + sqrt(D))/2.
            (1 + sqrt_res) % p * ((p + 1) / 2) % p
        } else {
            sqrt_res
        };
        out.push(make(SplitKind::Split, pi, 1, 1, omega_res));
    }
    out.sort();
    Ok(out)
}

/// Adjusts a split-prime generator so its valuation is exactly one: if
/// `p^2 | N(pi)` the translate `pi + p` works.
fn fix_uniformiser(pi: FieldElem, p: u64) -> FieldElem {
    let n = pi.norm();
    debug_assert!(n.is_integer());
    if arith::valuation_bigint(n.numer(), p) > 1 {
        let shifted = pi.add(&FieldElem::from_int(p as i64)).unwrap();
        debug_assert_eq!(arith::valuation_bigint(shifted.norm().numer(), p), 1);
        shifted
    } else {
        pi
    }
}

fn basis_of_prime(prime: &PrimeIdeal, k: QuadField) -> IdealBasis {
    let p = BigInt::from(prime.p);
    let (pi0, pi1) = integer_coords(&prime.pi).expect("generators are integral");
    let pi = (pi0, pi1);
    let pi_omega = omega_mul(k, &pi, &(BigInt::zero(), BigInt::one()));
    let gens = [
        (p.clone(), BigInt::zero()),
        (BigInt::zero(), p.clone()),
        pi,
        pi_omega,
    ];
    let basis = IdealBasis::from_generators(&gens);
    debug_assert_eq!(basis.norm(), BigInt::from(prime.p.pow(prime.f as u32)));
    basis
}

/// Integer coordinates of an integral element on `(1, omega)`.
fn integer_coords(x: &FieldElem) -> Result<(BigInt, BigInt)> {
    let (c0, c1) = x.omega_coords();
    if !c0.is_integer() || !c1.is_integer() {
        return Err(Error::NotIntegral);
    }
    Ok((c0.to_integer(), c1.to_integer()))
}

/// The ideal `P^k` as a Hermite-form Z-basis, by repeated two-element ideal
/// multiplication and reduction.
pub fn ideal_power_basis(prime: &PrimeIdeal, k: u32) -> Result<IdealBasis> {
    let quad = match prime.field {
        Field::Quadratic(q) => q,
        Field::Rational => {
            return Err(Error::UnsupportedField(
                "ideal bases exist only over quadratic fields".into(),
            ))
        }
    };
    let base = prime.basis.as_ref().expect("quadratic primes carry a basis");
    let mut acc = IdealBasis::full_ring();
    for _ in 0..k {
        acc = acc.mul(base, quad);
    }
    Ok(acc)
}

/// Exact valuation of a nonzero element at a prime.
///
/// Integral elements are tested for membership in successive powers of the
/// prime (bounded by the p-valuation of the norm); general elements reduce
/// to that case through an integer denominator.
pub fn valuation(x: &FieldElem, prime: &PrimeIdeal) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    match prime.field {
        Field::Rational => {
            let Some(r) = x.as_rat() else {
                return Err(Error::UnsupportedField(
                    "irrational element at a prime of Q".into(),
                ));
            };
            Ok(arith::valuation_bigint(r.numer(), prime.p)
                - arith::valuation_bigint(r.denom(), prime.p))
        }
        Field::Quadratic(k) => {
            let x = x.coerce(prime.field)?;
            let den = x.denominator();
            let scaled = x.scale(&Rat::from_integer(den.clone()));
            let (z0, z1) = integer_coords(&scaled).expect("denominator cleared");
            let vden = arith::valuation_bigint(&den, prime.p) * prime.e as i64;
            Ok(integral_valuation(&(z0, z1), prime, k) - vden)
        }
    }
}

fn integral_valuation(z: &(BigInt, BigInt), prime: &PrimeIdeal, k: QuadField) -> i64 {
    let norm: BigInt = {
        let t = BigInt::from(k.omega_trace());
        let n = BigInt::from(k.omega_norm());
        &z.0 * &z.0 + &t * (&z.0 * &z.1) + &n * (&z.1 * &z.1)
    };
    debug_assert!(!norm.is_zero());
    let bound = arith::valuation_bigint(&norm, prime.p) / prime.f as i64;
    let base = prime.basis.as_ref().expect("quadratic primes carry a basis");
    let mut power = base.clone();
    let mut v = 0i64;
    while v < bound && power.contains(&z.0, &z.1) {
        v += 1;
        power = power.mul(base, k);
    }
    v
}

/// A factored ideal: prime ideals with (nonzero) exponents, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFactorization {
    field: Field,
    factors: Vec<(PrimeIdeal, i64)>,
}

impl IdealFactorization {
    /// Builds a factorisation, dropping zero exponents and sorting.
    pub fn new(field: Field, mut factors: Vec<(PrimeIdeal, i64)>) -> IdealFactorization {
        factors.retain(|(_, e)| *e != 0);
        factors.sort_by(|x, y| x.0.cmp(&y.0));
        IdealFactorization { field, factors }
    }

    /// The trivial (unit) ideal.
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// The base field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Factors as `(prime, exponent)` pairs, sorted.
    pub fn factors(&self) -> &[(PrimeIdeal, i64)] {
        &self.factors
    }

    /// Exponent of the given prime (zero if absent).
    pub fn exponent_of(&self, prime: &PrimeIdeal) -> i64 {
        self.factors
            .iter()
            .find(|(q, _)| q == prime)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Absolute norm (requires nonnegative exponents to stay integral; the
    /// result is a positive rational in general).
    pub fn norm(&self) -> Rat {
        let mut acc = Rat::one();
        for (q, e) in &self.factors {
            let n = Rat::from_integer(BigInt::from(q.p.pow(q.f as u32)));
            acc *= num_traits::Pow::pow(n, *e as i32);
        }
        acc
    }
}

impl fmt::Display for IdealFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        let mut first = true;
        for (q, e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{q}")?;
            } else {
                write!(f, "{q}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for IdealFactorization {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            #[serde(flatten)]
            prime: &'a PrimeIdeal,
            exp: i64,
        }
        ser.collect_seq(self.factors.iter().map(|(q, e)| Entry { prime: q, exp: *e }))
    }
}

/// Factors the principal ideal `(x)` for a nonzero integral `x`.
///
/// The norm of `x` is factored over Z and each rational prime's share is
/// distributed among the primes above it by exact valuations.
pub fn factor_principal_ideal(x: &FieldElem) -> Result<IdealFactorization> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !x.is_integral() {
        return Err(Error::NotIntegral);
    }
    let field = x.field();
    let norm = x.norm();
    debug_assert!(norm.is_integer());
    let mut factors = Vec::new();
    for (p, np) in arith::factor_bigint(norm.numer())? {
        for prime in split_prime(field, p)? {
            let v = valuation(x, &prime)?;
            debug_assert!(v >= 0);
            if v > 0 {
                factors.push((prime, v));
            }
        }
        if cfg!(debug_assertions) {
            let total: i64 = factors
                .iter()
                .filter(|(q, _)| q.p == p)
                .map(|(q, e)| q.f as i64 * e)
                .sum();
            let expected = match field {
                // The norm of a rational is x^2, so its valuation doubles.
                Field::Rational => np as i64 / 2,
                Field::Quadratic(_) => np as i64,
            };
            debug_assert_eq!(total, expected, "norm valuation must distribute at {p}");
        }
    }
    Ok(IdealFactorization::new(field, factors))
}

/// Shortest nonzero vector of the rank-2 lattice spanned by `u` and `v`
/// under the norm form `N(x0 + x1*omega)`, by Lagrange-Gauss reduction.
///
/// Each step subtracts the nearest-integer multiple of the shorter vector
/// from the longer one, so the norms decrease geometrically and the loop
/// runs in time logarithmic in the input size.
fn shortest_vector(k: QuadField, u: (BigInt, BigInt), v: (BigInt, BigInt)) -> (BigInt, BigInt) {
    debug_assert!(k.is_imaginary());
    let t = BigInt::from(k.omega_trace());
    let n = BigInt::from(k.omega_norm());
    let norm = |x: &(BigInt, BigInt)| &x.0 * &x.0 + &t * &x.0 * &x.1 + &n * &x.1 * &x.1;
    // Twice the polarisation: 2*B(x, y) = N(x + y) - N(x) - N(y).
    let bil2 = |x: &(BigInt, BigInt), y: &(BigInt, BigInt)| {
        BigInt::from(2) * (&x.0 * &y.0 + &n * &x.1 * &y.1) + &t * (&x.0 * &y.1 + &x.1 * &y.0)
    };
    let (mut u, mut v) = (u, v);
    loop {
        if norm(&v) < norm(&u) {
            std::mem::swap(&mut u, &mut v);
        }
        // mu = round(B(u, v) / N(u)); the numerator and denominator are
        // doubled to stay in integers.
        let num = bil2(&u, &v);
        let den = BigInt::from(2) * norm(&u);
        let mu = (BigInt::from(2) * num + &den).div_floor(&(BigInt::from(2) * den));
        if mu.is_zero() {
            return u;
        }
        v = (&v.0 - &mu * &u.0, &v.1 - &mu * &u.1);
    }
}

/// Canonical choice among associates: smallest by absolute coordinates on
/// `(1, sqrt(D))`, preferring nonnegative signs.
fn canonical_min(cands: Vec<FieldElem>) -> Option<FieldElem> {
    cands.into_iter().min_by(|x, y| {
        let key = |z: &FieldElem| {
            (
                z.coord_a().abs(),
                z.coord_b().abs(),
                z.coord_a().is_negative(),
                z.coord_b().is_negative(),
            )
        };
        key(x).cmp(&key(y))
    })
}

/// Searches for a generator of an integral ideal given by a basis, over an
/// imaginary quadratic field; `None` when the ideal is not principal. The
/// choice among associates is the canonical minimum.
///
/// A nonzero element of the ideal has norm at least the ideal norm, with
/// equality exactly for generators, so reducing the basis and inspecting
/// the shortest vector decides principality. The generators are then that
/// vector's unit multiples.
pub fn generator_of_basis(basis: &IdealBasis, field: Field) -> Result<Option<FieldElem>> {
    let q = match field {
        Field::Quadratic(q) if q.is_imaginary() => q,
        _ => {
            return Err(Error::UnsupportedField(
                "generator search needs a finite unit group".into(),
            ))
        }
    };
    let u = (basis.a.clone(), BigInt::zero());
    let v = (basis.b.clone(), basis.c.clone());
    let (c0, c1) = shortest_vector(q, u, v);
    let elem_norm = &c0 * &c0
        + BigInt::from(q.omega_trace()) * &c0 * &c1
        + BigInt::from(q.omega_norm()) * &c1 * &c1;
    if elem_norm != basis.norm() {
        return Ok(None);
    }
    let gen = FieldElem::from_omega_coords(field, Rat::from_integer(c0), Rat::from_integer(c1));
    let mut cands = Vec::new();
    for unit in units_of(field)? {
        cands.push(gen.mul(&unit)?);
    }
    Ok(canonical_min(cands))
}

/// Searches for a generator of `P^k`; `None` when that power is not
/// principal. Supported over Q and over imaginary quadratic fields.
pub fn principal_generator_of_power(prime: &PrimeIdeal, k: u32) -> Result<Option<FieldElem>> {
    match prime.field {
        Field::Rational => Ok(Some(FieldElem::from_rat(Rat::from_integer(
            BigInt::from(prime.p).pow(k),
        )))),
        Field::Quadratic(_) => {
            let basis = ideal_power_basis(prime, k)?;
            generator_of_basis(&basis, prime.field)
        }
    }
}

/// n-th root of a nonzero element of an imaginary quadratic field, if one
/// exists: take the ideal n-th root, search for a principal generator, and
/// let the finitely many units decide.
pub(crate) fn nth_power_root_imaginary(x: &FieldElem, n: u32) -> Result<Option<FieldElem>> {
    let k = match x.field() {
        Field::Quadratic(k) if k.is_imaginary() => k,
        _ => return Err(Error::UnsupportedField("imaginary quadratic input required".into())),
    };
    // Clear denominators: root(x) = root(x * m^n) / m.
    let m = x.denominator();
    let z = x.scale(&Rat::from_integer(m.clone()).pow(n as i32));
    debug_assert!(z.is_integral());
    let factored = factor_principal_ideal(&z)?;
    let mut root_basis = IdealBasis::full_ring();
    for (prime, e) in factored.factors() {
        if e % n as i64 != 0 {
            return Ok(None);
        }
        let part = ideal_power_basis(prime, (*e / n as i64) as u32)?;
        root_basis = root_basis.mul(&part, k);
    }
    let Some(g) = generator_of_basis(&root_basis, x.field())? else {
        return Ok(None); // ideal n-th root is not principal
    };
    let minv = FieldElem::from_rat(Rat::new(BigInt::one(), m));
    for u in crate::numeric::units_of(x.field())? {
        let cand = u.mul(&g)?;
        if cand.pow(n as i64)? == z {
            return Ok(Some(cand.mul(&minv)?));
        }
    }
    Ok(None)
}

/// Convenience: the factored ideal map `p -> exponents` restricted to one
/// rational prime, as a `BTreeMap` keyed by the primes above `p`.
pub fn valuations_above(x: &FieldElem, field: Field, p: u64) -> Result<BTreeMap<PrimeIdeal, i64>> {
    let mut out = BTreeMap::new();
    for prime in split_prime(field, p)? {
        out.insert(prime.clone(), valuation(x, &prime)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn q(d: i64) -> QuadField {
        QuadField::new(d).unwrap()
    }

    fn elem(d: i64, a: i64, b: i64) -> FieldElem {
        FieldElem::new(q(d), rat(a), rat(b))
    }

    #[test]
    fn splitting_in_q_sqrt_minus_33() {
        let field = Field::Quadratic(q(-33));
        let two = split_prime(field, 2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].kind(), SplitKind::Ramified);
        assert_eq!(*two[0].pi(), elem(-33, 1, 1)); // (2, 1 + sqrt(-33))
        let three = split_prime(field, 3).unwrap();
        assert_eq!(three[0].kind(), SplitKind::Ramified);
        assert_eq!(*three[0].pi(), elem(-33, 0, 1)); // (3, sqrt(-33))
        let seven = split_prime(field, 7).unwrap();
        assert_eq!(seven.len(), 2);
        assert!(seven.iter().all(|pr| pr.kind() == SplitKind::Split));
        let pis: Vec<_> = seven.iter().map(|pr| pr.pi().clone()).collect();
        assert!(pis.contains(&elem(-33, 3, 1))); // (7, sqrt(-33) + 3)
        assert!(pis.contains(&elem(-33, 4, 1))); // (7, sqrt(-33) + 4)
        for p in [5u64, 13] {
            let primes = split_prime(field, p).unwrap();
            assert_eq!(primes[0].kind(), SplitKind::Inert, "{p} should be inert");
        }
    }

    #[test]
    fn splitting_in_gaussian_and_eisenstein_fields() {
        let gauss = Field::Quadratic(q(-1));
        assert_eq!(split_prime(gauss, 2).unwrap()[0].kind(), SplitKind::Ramified);
        assert_eq!(split_prime(gauss, 5).unwrap().len(), 2);
        assert_eq!(split_prime(gauss, 13).unwrap().len(), 2);
        assert_eq!(split_prime(gauss, 3).unwrap()[0].kind(), SplitKind::Inert);
        assert_eq!(split_prime(gauss, 7).unwrap()[0].kind(), SplitKind::Inert);
        let eis = Field::Quadratic(q(-3));
        assert_eq!(split_prime(eis, 3).unwrap()[0].kind(), SplitKind::Ramified);
        assert_eq!(split_prime(eis, 2).unwrap()[0].kind(), SplitKind::Inert);
        assert_eq!(split_prime(eis, 5).unwrap()[0].kind(), SplitKind::Inert);
        assert_eq!(split_prime(eis, 7).unwrap().len(), 2);
        assert_eq!(split_prime(eis, 13).unwrap().len(), 2);
        // Split primes of Q(sqrt(17)): 2 splits since 17 = 1 mod 8.
        let k17 = Field::Quadratic(q(17));
        let two = split_prime(k17, 2).unwrap();
        assert_eq!(two.len(), 2);
        for pr in two {
            assert_eq!(arith::valuation_bigint(pr.uniformiser().norm().numer(), 2), 1);
        }
    }

    #[test]
    fn valuation_multiplicativity_and_denominators() {
        let field = Field::Quadratic(q(-33));
        let sevens = split_prime(field, 7).unwrap();
        let pr7 = sevens
            .iter()
            .find(|pr| *pr.pi() == elem(-33, 4, 1))
            .unwrap();
        // sqrt(-33) + 4 has norm 49, all of it at this one prime: it
        // generates the square of the prime (whose class has order two).
        let x = elem(-33, 4, 1);
        let y = elem(-33, 3, 1);
        let vx = valuation(&x, pr7).unwrap();
        let vy = valuation(&y, pr7).unwrap();
        assert_eq!((vx, vy), (2, 0));
        assert_eq!(valuation(pr7.uniformiser(), pr7).unwrap(), 1);
        let vxy = valuation(&x.mul(&y).unwrap(), pr7).unwrap();
        assert_eq!(vxy, vx + vy);
        let inv = x.inv().unwrap();
        assert_eq!(valuation(&inv, pr7).unwrap(), -vx);
        assert!(valuation(&FieldElem::zero(field), pr7).is_err());
    }

    #[test]
    fn example_discriminant_factorisations_over_q_sqrt_10() {
        // Two models of one curve over Q(sqrt(10)): discriminants
        // -12224 sqrt(10) - 38656 and -2984375 sqrt(10) - 9437500 factor as
        // P^13 Q and P Q R^12 with P = (2, sqrt(10)), Q = (3, sqrt(10) + 2),
        // R = (5, sqrt(10)).
        let field = Field::Quadratic(q(10));
        let d1 = elem(10, -38656, -12224);
        let d2 = elem(10, -9437500, -2984375);
        let p2 = &split_prime(field, 2).unwrap()[0];
        let p5 = &split_prime(field, 5).unwrap()[0];
        let threes = split_prime(field, 3).unwrap();
        assert_eq!(threes.len(), 2);
        let q3 = threes
            .iter()
            .find(|pr| *pr.pi() == elem(10, 2, 1))
            .expect("(3, sqrt(10) + 2) exists");
        let f1 = factor_principal_ideal(&d1).unwrap();
        assert_eq!(f1.exponent_of(p2), 13);
        assert_eq!(f1.exponent_of(q3), 1);
        assert_eq!(f1.exponent_of(p5), 0);
        assert_eq!(f1.factors().len(), 2);
        let f2 = factor_principal_ideal(&d2).unwrap();
        assert_eq!(f2.exponent_of(p2), 1);
        assert_eq!(f2.exponent_of(q3), 1);
        assert_eq!(f2.exponent_of(p5), 12);
        assert_eq!(f2.factors().len(), 3);
    }

    #[test]
    fn power_bases_and_norms() {
        let field = Field::Quadratic(q(-33));
        let pr2 = &split_prime(field, 2).unwrap()[0];
        for k in 1..=6u32 {
            let basis = ideal_power_basis(pr2, k).unwrap();
            assert_eq!(basis.norm(), BigInt::from(2u64).pow(k));
        }
        // (2, 1+sqrt(-33))^2 = (2): it must contain exactly the multiples of 2.
        let sq = ideal_power_basis(pr2, 2).unwrap();
        assert!(sq.contains(&BigInt::from(2), &BigInt::zero()));
        assert!(sq.contains(&BigInt::zero(), &BigInt::from(2)));
        assert!(!sq.contains(&BigInt::one(), &BigInt::one()));
    }

    #[test]
    fn principal_generators_match_known_powers() {
        let field = Field::Quadratic(q(-33));
        let pr2 = &split_prime(field, 2).unwrap()[0];
        let pr3 = &split_prime(field, 3).unwrap()[0];
        let sevens = split_prime(field, 7).unwrap();
        // P2^12 = (64), P3^6 = (27).
        let g = principal_generator_of_power(pr2, 12).unwrap().unwrap();
        assert_eq!(g, FieldElem::int_in(field, 64));
        let g = principal_generator_of_power(pr3, 6).unwrap().unwrap();
        assert_eq!(g, FieldElem::int_in(field, 27));
        // The primes above 7 square to (sqrt(-33) -+ 4) up to sign.
        let mut squares = Vec::new();
        for pr in &sevens {
            let g = principal_generator_of_power(pr, 2).unwrap().unwrap();
            squares.push(g);
        }
        assert!(squares.contains(&elem(-33, 4, -1)) || squares.contains(&elem(-33, -4, 1)));
        assert!(squares.contains(&elem(-33, 4, 1)) || squares.contains(&elem(-33, -4, -1)));
        // Small powers of the ramified prime above 2 are not principal.
        assert_eq!(principal_generator_of_power(pr2, 1).unwrap(), None);
        assert_eq!(principal_generator_of_power(pr2, 3).unwrap(), None);
        // The class of P2 has order two: P2^2 = (2).
        assert_eq!(
            principal_generator_of_power(pr2, 2).unwrap(),
            Some(FieldElem::int_in(field, 2))
        );
    }

    #[test]
    fn gaussian_generator_cubes() {
        // Over Q(i): (2+i)^3 = 2 + 11i generates the cube of a prime above 5.
        let field = Field::Quadratic(q(-1));
        let fives = split_prime(field, 5).unwrap();
        let mut cubes = Vec::new();
        for pr in &fives {
            let g = principal_generator_of_power(pr, 3).unwrap().unwrap();
            cubes.push(g);
        }
        let target = elem(-1, 2, 11);
        assert!(cubes
            .iter()
            .any(|g| crate::numeric::units_of(field).unwrap().iter().any(|u| {
                u.mul(g).unwrap() == target
            })));
    }

    #[test]
    fn nth_roots_in_imaginary_fields() {
        use crate::numeric::nth_power_root;
        // Cube root of 2 + 11i is 2 + i (up to the right unit).
        let x = elem(-1, 2, 11);
        let r = nth_power_root(&x, 3).unwrap().unwrap();
        assert_eq!(r.pow(3).unwrap(), x);
        // i is a 3rd power in Q(i) but not a 12th power.
        let i = FieldElem::sqrt_d(q(-1));
        assert!(nth_power_root(&i, 3).unwrap().is_some());
        assert!(nth_power_root(&i, 12).unwrap().is_none());
        // 1 is always a 12th power; -1 is a square in Q(i) only.
        assert!(nth_power_root(&FieldElem::int_in(Field::Quadratic(q(-1)), -1), 2)
            .unwrap()
            .is_some());
        assert!(nth_power_root(&FieldElem::int_in(Field::Quadratic(q(-33)), -1), 2)
            .unwrap()
            .is_none());
        // Elements with denominators round-trip too.
        let zeta = FieldElem::new(
            q(-3),
            Rat::new(BigInt::from(-1), BigInt::from(2)),
            Rat::new(BigInt::one(), BigInt::from(2)),
        );
        for n in [2u32, 3, 4, 6, 12] {
            let xn = zeta.pow(n as i64).unwrap();
            let root = nth_power_root(&xn, n).unwrap().expect("power must have a root");
            assert_eq!(root.pow(n as i64).unwrap(), xn);
        }
        // sqrt(-33) + 4 generates the square of a non-principal prime, so it
        // has no square root in its field.
        assert!(nth_power_root(&elem(-33, 4, 1), 2).unwrap().is_none());
    }

    #[test]
    fn random_products_respect_valuations() {
        // Deterministic pseudo-random sweep: valuations add over products,
        // and the norm valuation distributes over the primes above p.
        let field = Field::Quadratic(q(-33));
        let mut seed = 0x243F6A88u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 41) as i64 - 20
        };
        let primes: Vec<PrimeIdeal> = [2u64, 3, 7]
            .iter()
            .flat_map(|&p| split_prime(field, p).unwrap())
            .collect();
        let mut checked = 0;
        for _ in 0..200 {
            let x = elem(-33, next(), next());
            let y = elem(-33, next(), next());
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let xy = x.mul(&y).unwrap();
            for pr in &primes {
                let vx = valuation(&x, pr).unwrap();
                let vy = valuation(&y, pr).unwrap();
                assert_eq!(valuation(&xy, pr).unwrap(), vx + vy);
            }
            checked += 1;
        }
        assert!(checked > 150);
    }

    #[test]
    fn factorisation_json_shape() {
        let x = elem(-33, 4, 1);
        let f = factor_principal_ideal(&x).unwrap();
        let json = serde_json::to_value(&f).unwrap();
        let arr = json.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        assert_eq!(arr[0]["p"], 7);
        assert_eq!(arr[0]["kind"], "split");
        assert_eq!(arr[0]["exp"], 2);
        assert_eq!(arr[0]["pi"]["D"], -33);
    }
}
