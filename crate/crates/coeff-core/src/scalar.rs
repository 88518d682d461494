use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// An exact coefficient.
///
/// `Int` doubles as a ring-agnostic literal: combining it with a `Rat` or a
/// `Mod` promotes it into that ring. Mixing two different moduli is a logic
/// error and panics. Equality is semantic across promotion, so `Int(2)`
/// equals `Rat(2/1)` and `Mod{2,5}` equals `Int(7)`.
#[derive(Clone, Debug)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    /// Residue `v` modulo the prime `p`, with `0 <= v < p`.
    Mod { v: u64, p: u64 },
}

/// The coefficient ring chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Int,
    Rat,
    Mod(u64),
}

fn mod_of_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mod_mul(r, b, p);
        }
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Scalar::Int(BigInt::one())
    }

    /// `(-1)^e` as a literal.
    pub fn sign(e: i64) -> Self {
        Scalar::from(crate::sign(e))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { v, p } => *v == 1 % *p,
        }
    }

    /// Multiplicative inverse inside the scalar's own ring; `None` for zero
    /// and for integers other than ±1.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Int(n) if n.abs().is_one() => Some(self.clone()),
            Scalar::Int(_) => None,
            Scalar::Rat(q) if q.is_zero() => None,
            Scalar::Rat(q) => Some(Scalar::Rat(q.recip())),
            Scalar::Mod { v: 0, .. } => None,
            Scalar::Mod { v, p } => Some(Scalar::Mod { v: mod_pow(*v, *p - 2, *p), p: *p }),
        }
    }

    fn to_mod(&self, p: u64) -> u64 {
        match self {
            Scalar::Int(n) => mod_of_bigint(n, p),
            Scalar::Rat(q) => {
                let num = mod_of_bigint(q.numer(), p);
                let den = mod_of_bigint(q.denom(), p);
                assert!(den != 0, "denominator of {q} vanishes modulo {p}");
                mod_mul(num, mod_pow(den, p - 2, p), p)
            }
            Scalar::Mod { v, p: q } => {
                assert_eq!(*q, p, "mixed moduli {q} and {p}");
                *v
            }
        }
    }

    fn to_rat(&self) -> BigRational {
        match self {
            Scalar::Int(n) => BigRational::from_integer(n.clone()),
            Scalar::Rat(q) => q.clone(),
            Scalar::Mod { .. } => unreachable!("residues are never promoted to rationals"),
        }
    }

    /// Bring both operands into a common ring.
    fn unify(&self, other: &Scalar) -> Kind {
        match (self, other) {
            (Scalar::Mod { p, .. }, _) | (_, Scalar::Mod { p, .. }) => Kind::Mod(*p),
            (Scalar::Rat(_), _) | (_, Scalar::Rat(_)) => Kind::Rat,
            _ => Kind::Int,
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        fi: impl Fn(&BigInt, &BigInt) -> BigInt,
        fq: impl Fn(&BigRational, &BigRational) -> BigRational,
        fm: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match self.unify(other) {
            Kind::Int => match (self, other) {
                (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(fi(a, b)),
                _ => unreachable!(),
            },
            Kind::Rat => Scalar::Rat(fq(&self.to_rat(), &other.to_rat())),
            Kind::Mod(p) => Scalar::Mod { v: fm(self.to_mod(p), other.to_mod(p), p), p },
        }
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Int,
    Rat,
    Mod(u64),
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Int(BigInt::from(n))
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Int(n)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match self.unify(other) {
            Kind::Int => match (self, other) {
                (Scalar::Int(a), Scalar::Int(b)) => a == b,
                _ => unreachable!(),
            },
            Kind::Rat => self.to_rat() == other.to_rat(),
            Kind::Mod(p) => self.to_mod(p) == other.to_mod(p),
        }
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, |a, b| a + b, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, |a, b| a - b, |a, b, p| ((a as u128 + (p - b) as u128) % p as u128) as u64)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, |a, b| a * b, mod_mul)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(-n),
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Mod { v, p } => Scalar::Mod { v: (*p - *v) % *p, p: *p },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Ring {
    /// Parses `int`, `rat` or `mod:p` with `p` prime.
    pub fn parse(s: &str) -> Result<Ring, Error> {
        match s {
            "int" => Ok(Ring::Int),
            "rat" => Ok(Ring::Rat),
            _ => {
                let p = s
                    .strip_prefix("mod:")
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| Error::input("coeff", format!("expected int, rat or mod:p, got {s:?}")))?;
                if !is_prime(p) {
                    return Err(Error::input("coeff", format!("modulus {p} is not prime")));
                }
                Ok(Ring::Mod(p))
            }
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Int)
    }

    /// Requires a field, for routines that divide.
    pub fn require_field(self) -> Result<(), Error> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::Unsupported("elimination needs rat or mod:p coefficients".into()))
        }
    }

    /// Moves a scalar into this ring. A rational cannot move into `Int`.
    pub fn coerce(self, s: &Scalar) -> Result<Scalar, Error> {
        Ok(match (self, s) {
            (Ring::Int, Scalar::Int(_)) => s.clone(),
            (Ring::Int, Scalar::Rat(q)) if q.is_integer() => Scalar::Int(q.to_integer()),
            (Ring::Int, _) => return Err(Error::Unsupported(format!("{s} is not an integer"))),
            (Ring::Rat, Scalar::Mod { .. }) => return Err(Error::Unsupported(format!("residue {s} in rat"))),
            (Ring::Rat, _) => Scalar::Rat(s.to_rat()),
            (Ring::Mod(p), Scalar::Rat(q)) if mod_of_bigint(q.denom(), p) == 0 => {
                return Err(Error::Unsupported(format!("{q} has no residue mod {p}")))
            }
            (Ring::Mod(p), Scalar::Mod { p: q, .. }) if *q != p => {
                return Err(Error::Unsupported(format!("residue mod {q} in mod:{p}")))
            }
            (Ring::Mod(p), _) => Scalar::Mod { v: s.to_mod(p), p },
        })
    }

    pub fn zero(self) -> Scalar {
        self.coerce(&Scalar::zero()).expect("zero lives in every ring")
    }

    pub fn one(self) -> Scalar {
        self.coerce(&Scalar::one()).expect("one lives in every ring")
    }

    /// Parses a decimal coefficient string; fractions `a/b` are allowed
    /// in `rat` and in `mod:p` when `b` is invertible.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, Error> {
        let bad = || Error::input("", format!("bad coefficient {s:?}"));
        let t = s.trim();
        let raw = if let Some((a, b)) = t.split_once('/') {
            let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
            let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Scalar::Rat(BigRational::new(a, b))
        } else {
            Scalar::Int(BigInt::from_str(t).map_err(|_| bad())?)
        };
        self.coerce(&raw).map_err(|e| Error::input("", e.to_string()))
    }

    /// Inverse of a nonzero element, computed in this ring.
    pub fn inv(self, s: &Scalar) -> Option<Scalar> {
        self.coerce(s).ok()?.inv()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "int"),
            Ring::Rat => write!(f, "rat"),
            Ring::Mod(p) => write!(f, "mod:{p}"),
        }
    }
}

impl PartialOrd for Ring {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ring {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |r: &Ring| match r {
            Ring::Int => (0, 0),
            Ring::Rat => (1, 0),
            Ring::Mod(p) => (2, *p),
        };
        key(self).cmp(&key(other))
    }
}
