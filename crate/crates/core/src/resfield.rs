//! Residue fields of primes in degree <= 2 number fields: `F_p` for primes
//! of Q and degree-one primes, `F_{p^2}` for inert primes, with reduction
//! of semilocal field elements, canonical lifts, and exhaustive root
//! finding for the small polynomials local reduction analysis needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith;
use crate::error::{Error, Result};
use crate::ideals::PrimeIdeal;
use crate::numeric::{rat, Field, FieldElem, Rat};

/// Exhaustive searches stay comfortable below this field size.
const MAX_ENUMERATION: u64 = 1 << 22;

/// A residue field `F_p` or `F_{p^2}`, the latter presented as
/// `F_p[x] / (x^2 - t x + n)` with `x` the image of omega.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResField {
    p: u64,
    f: u8,
    /// Trace and norm of omega mod p (zero for degree-one fields).
    t: u64,
    n: u64,
    /// Image of omega when f = 1 (zero over Q).
    omega_res: u64,
    field: Field,
}

/// An element `c0 + c1 x` of a residue field (`c1 = 0` when `f = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResElem {
    c0: u64,
    c1: u64,
}

impl ResElem {
    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
}

impl ResField {
    /// The residue field of a prime ideal.
    pub fn of_prime(prime: &PrimeIdeal) -> ResField {
        let p = prime.p();
        let (t, n) = match prime.field() {
            Field::Rational => (0, 0),
            Field::Quadratic(k) => (
                k.omega_trace().rem_euclid(p as i64) as u64,
                k.omega_norm().rem_euclid(p as i64) as u64,
            ),
        };
        if prime.f() == 2 {
            ResField {
                p,
                f: 2,
                t,
                n,
                omega_res: 0,
                field: prime.field(),
            }
        } else {
            ResField {
                p,
                f: 1,
                t: 0,
                n: 0,
                omega_res: prime.omega_residue(),
                field: prime.field(),
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Number of elements `p^f`.
    pub fn size(&self) -> u64 {
        if self.f == 2 {
            self.p * self.p
        } else {
            self.p
        }
    }

    pub fn zero(&self) -> ResElem {
        ResElem { c0: 0, c1: 0 }
    }

    pub fn one(&self) -> ResElem {
        ResElem { c0: 1, c1: 0 }
    }

    pub fn from_u64(&self, v: u64) -> ResElem {
        ResElem {
            c0: v % self.p,
            c1: 0,
        }
    }

    pub fn add(&self, a: ResElem, b: ResElem) -> ResElem {
        ResElem {
            c0: (a.c0 + b.c0) % self.p,
            c1: (a.c1 + b.c1) % self.p,
        }
    }

    pub fn neg(&self, a: ResElem) -> ResElem {
        ResElem {
            c0: (self.p - a.c0) % self.p,
            c1: (self.p - a.c1) % self.p,
        }
    }

    pub fn sub(&self, a: ResElem, b: ResElem) -> ResElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: ResElem, b: ResElem) -> ResElem {
        // (a0 + a1 x)(b0 + b1 x) with x^2 = t x - n.
        let p = self.p;
        let cross = arith::mul_mod_u64(a.c1, b.c1, p);
        let c0 = (arith::mul_mod_u64(a.c0, b.c0, p) + p - arith::mul_mod_u64(self.n, cross, p)) % p;
        let c1 = (arith::mul_mod_u64(a.c0, b.c1, p)
            + arith::mul_mod_u64(a.c1, b.c0, p)
            + arith::mul_mod_u64(self.t, cross, p))
            % p;
        ResElem { c0, c1 }
    }

    pub fn inv(&self, a: ResElem) -> Result<ResElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if a.c1 == 0 {
            let inv = arith::pow_mod_u64(a.c0, self.p - 2, self.p);
            return Ok(ResElem { c0: inv, c1: 0 });
        }
        // Conjugate over F_p: a0 + a1 x maps to (a0 + t a1) - a1 x, and
        // a * conj(a) lies in F_p.
        let conj = ResElem {
            c0: (a.c0 + arith::mul_mod_u64(self.t, a.c1, self.p)) % self.p,
            c1: self.p - a.c1,
        };
        let norm = self.mul(a, conj);
        debug_assert_eq!(norm.c1, 0);
        let ninv = arith::pow_mod_u64(norm.c0, self.p - 2, self.p);
        Ok(self.mul(conj, ResElem { c0: ninv, c1: 0 }))
    }

    pub fn div(&self, a: ResElem, b: ResElem) -> Result<ResElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// All field elements, for exhaustive searches.
    pub fn elements(&self) -> Result<Vec<ResElem>> {
        if self.size() > MAX_ENUMERATION {
            return Err(Error::ResidueFieldTooLarge(self.size()));
        }
        let c1max = if self.f == 2 { self.p } else { 1 };
        let mut out = Vec::with_capacity(self.size() as usize);
        for c1 in 0..c1max {
            for c0 in 0..self.p {
                out.push(ResElem { c0, c1 });
            }
        }
        Ok(out)
    }

    /// Horner evaluation of a polynomial given low-degree-first.
    pub fn eval(&self, coeffs: &[ResElem], x: ResElem) -> ResElem {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), *c);
        }
        acc
    }

    /// Roots with multiplicities of a nonzero polynomial, by exhaustive
    /// search and synthetic division.
    pub fn roots(&self, coeffs: &[ResElem]) -> Result<Vec<(ResElem, u32)>> {
        assert!(coeffs.iter().any(|c| !c.is_zero()), "zero polynomial");
        let mut out = Vec::new();
        for x in self.elements()? {
            if !self.eval(coeffs, x).is_zero() {
                continue;
            }
            // Deflate by (X - x) until it no longer divides.
            let mut mult = 0u32;
            let mut work = coeffs.to_vec();
            loop {
                let (quot, rem) = self.deflate(&work, x);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                work = quot;
                if work.is_empty() {
                    break;
                }
            }
            out.push((x, mult));
        }
        Ok(out)
    }

    /// Divides by `(X - x)`, returning quotient (low-first) and remainder.
    fn deflate(&self, coeffs: &[ResElem], x: ResElem) -> (Vec<ResElem>, ResElem) {
        let mut quot = vec![self.zero(); coeffs.len().saturating_sub(1)];
        let mut acc = self.zero();
        for (i, c) in coeffs.iter().enumerate().rev() {
            acc = self.add(self.mul(acc, x), *c);
            if i > 0 {
                quot[i - 1] = acc;
            }
        }
        (quot, acc)
    }

    /// A square root, if one exists.
    pub fn sqrt(&self, a: ResElem) -> Result<Option<ResElem>> {
        if a.is_zero() {
            return Ok(Some(self.zero()));
        }
        Ok(self
            .elements()?
            .into_iter()
            .find(|x| self.mul(*x, *x) == a))
    }

    /// A cube root, if one exists.
    pub fn cbrt(&self, a: ResElem) -> Result<Option<ResElem>> {
        if a.is_zero() {
            return Ok(Some(self.zero()));
        }
        Ok(self
            .elements()?
            .into_iter()
            .find(|x| self.mul(self.mul(*x, *x), *x) == a))
    }

    /// Reduces a field element with nonnegative valuation whose reduced
    /// denominator is coprime to `p` (which holds for every intermediate
    /// quantity local reduction produces from an integral model).
    pub fn reduce(&self, x: &FieldElem) -> Result<ResElem> {
        let den = x.denominator();
        let p = BigInt::from(self.p);
        if den.gcd(&p) != BigInt::from(1) {
            return Err(Error::NotIntegral);
        }
        let scaled = x.scale(&Rat::from_integer(den.clone()));
        let (z0, z1) = {
            let (c0, c1) = scaled.omega_coords();
            debug_assert!(c0.is_integer() && c1.is_integer());
            (c0.to_integer(), c1.to_integer())
        };
        let redu = |z: &BigInt| -> u64 {
            z.mod_floor(&p).to_u64().expect("residue fits in u64")
        };
        let num = if self.f == 2 {
            ResElem {
                c0: redu(&z0),
                c1: redu(&z1),
            }
        } else {
            let omega = ResElem {
                c0: self.omega_res,
                c1: 0,
            };
            self.add(
                ResElem {
                    c0: redu(&z0),
                    c1: 0,
                },
                self.mul(
                    ResElem {
                        c0: redu(&z1),
                        c1: 0,
                    },
                    omega,
                ),
            )
        };
        let dres = ResElem {
            c0: redu(&den),
            c1: 0,
        };
        self.div(num, dres)
    }

    /// Canonical small lift back into the number field.
    pub fn lift(&self, a: ResElem) -> FieldElem {
        match self.field {
            Field::Rational => FieldElem::from_int(a.c0 as i64),
            Field::Quadratic(_) => {
                let c0 = rat(a.c0 as i64);
                let c1 = rat(a.c1 as i64);
                FieldElem::from_omega_coords(self.field, c0, c1)
            }
        }
    }

    /// Characteristic as i64 (handy for comparisons).
    pub fn characteristic(&self) -> u64 {
        self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::split_prime;
    use crate::numeric::QuadField;

    fn prime_of(d: i64, p: u64, idx: usize) -> PrimeIdeal {
        let field = Field::Quadratic(QuadField::new(d).unwrap());
        split_prime(field, p).unwrap()[idx].clone()
    }

    #[test]
    fn prime_field_arithmetic() {
        let pr = PrimeIdeal::rational(7).unwrap();
        let rf = ResField::of_prime(&pr);
        let a = rf.from_u64(3);
        let b = rf.from_u64(5);
        assert_eq!(rf.add(a, b), rf.from_u64(1));
        assert_eq!(rf.mul(a, b), rf.from_u64(1));
        assert_eq!(rf.inv(a).unwrap(), rf.from_u64(5));
        let x = FieldElem::from_rat(Rat::new(BigInt::from(22), BigInt::from(3)));
        // 22/3 = 22 * 3^{-1} = 1 * 5 = 5 mod 7.
        assert_eq!(rf.reduce(&x).unwrap(), rf.from_u64(5));
        assert!(rf
            .reduce(&FieldElem::from_rat(Rat::new(1.into(), 7.into())))
            .is_err());
    }

    #[test]
    fn quadratic_residue_fields() {
        // Inert 3 in Q(i): F_9 = F_3[x]/(x^2 + 1).
        let pr = prime_of(-1, 3, 0);
        let rf = ResField::of_prime(&pr);
        assert_eq!(rf.size(), 9);
        let i = rf.reduce(&FieldElem::sqrt_d(QuadField::new(-1).unwrap())).unwrap();
        assert_eq!(rf.mul(i, i), rf.neg(rf.one()));
        assert_eq!(rf.mul(i, rf.inv(i).unwrap()), rf.one());
        // Split 5 in Q(i): degree one, sqrt(-1) maps to a square root of -1 mod 5.
        let pr = prime_of(-1, 5, 0);
        let rf = ResField::of_prime(&pr);
        assert_eq!(rf.size(), 5);
        let i = rf.reduce(&FieldElem::sqrt_d(QuadField::new(-1).unwrap())).unwrap();
        assert_eq!(rf.mul(i, i), rf.from_u64(4));
        // Ramified 2 in Q(sqrt(10)): sqrt(10) reduces to 0.
        let pr = prime_of(10, 2, 0);
        let rf = ResField::of_prime(&pr);
        let s = rf.reduce(&FieldElem::sqrt_d(QuadField::new(10).unwrap())).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn half_integral_reduction() {
        // omega = (1 + sqrt(-3))/2 reduces consistently at the split primes
        // of Q(sqrt(-3)) above 7: it must be a root of x^2 - x + 1.
        let field = Field::Quadratic(QuadField::new(-3).unwrap());
        for pr in split_prime(field, 7).unwrap() {
            let rf = ResField::of_prime(&pr);
            let w = rf.reduce(&FieldElem::omega(QuadField::new(-3).unwrap())).unwrap();
            let val = rf.add(rf.sub(rf.mul(w, w), w), rf.one());
            assert!(val.is_zero());
        }
    }

    #[test]
    fn roots_and_multiplicities() {
        // Over F_7: (x - 2)^2 (x - 5) = x^3 - 9x^2 + 24x - 20.
        let pr = PrimeIdeal::rational(7).unwrap();
        let rf = ResField::of_prime(&pr);
        let c = |v: i64| rf.from_u64(v.rem_euclid(7) as u64);
        let coeffs = [c(-20), c(24), c(-9), c(1)];
        let mut roots = rf.roots(&coeffs).unwrap();
        roots.sort_by_key(|(r, _)| (r.c1, r.c0));
        assert_eq!(roots, vec![(rf.from_u64(2), 2), (rf.from_u64(5), 1)]);
        // Quadratic with no roots in F_7 but two in F_49.
        let pr9 = prime_of(-1, 3, 0);
        let rf9 = ResField::of_prime(&pr9);
        let c9 = |v: i64| rf9.from_u64(v.rem_euclid(3) as u64);
        // x^2 + 1 over F_9 has the two imaginary roots.
        let roots = rf9.roots(&[c9(1), c9(0), c9(1)]).unwrap();
        assert_eq!(roots.len(), 2);
        for (r, m) in roots {
            assert_eq!(m, 1);
            assert_eq!(rf9.mul(r, r), rf9.neg(rf9.one()));
        }
    }

    #[test]
    fn square_and_cube_roots() {
        let pr = PrimeIdeal::rational(13).unwrap();
        let rf = ResField::of_prime(&pr);
        for v in 0..13u64 {
            let a = rf.from_u64(v);
            if let Some(s) = rf.sqrt(a).unwrap() {
                assert_eq!(rf.mul(s, s), a);
            }
            if let Some(cu) = rf.cbrt(a).unwrap() {
                assert_eq!(rf.mul(rf.mul(cu, cu), cu), a);
            }
        }
        // Quadratic nonresidue mod 13.
        assert!(rf.sqrt(rf.from_u64(2)).unwrap().is_none());
    }

    #[test]
    fn lift_round_trips() {
        let pr = prime_of(-1, 3, 0);
        let rf = ResField::of_prime(&pr);
        for e in rf.elements().unwrap() {
            let lifted = rf.lift(e);
            assert_eq!(rf.reduce(&lifted).unwrap(), e);
        }
    }
}
