//! Sparse polynomials in `X, Y, Z, t` with arbitrary-precision integer
//! coefficients.
//!
//! Canonical text lists terms by descending `(x, y, z, t)` exponent vectors,
//! e.g. `X^2*Y^2 + 2*X^2*Y + X^2 + ... + 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];

    fn symbol(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
            Var::Z => "Z",
            Var::T => "t",
        }
    }

    fn from_symbol(s: &str) -> Option<Var> {
        match s {
            "X" | "x" => Some(Var::X),
            "Y" | "y" => Some(Var::Y),
            "Z" | "z" => Some(Var::Z),
            "t" | "T" => Some(Var::T),
            _ => None,
        }
    }
}

/// Exponents of `(X, Y, Z, t)`.
pub type Monomial = [u32; 4];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MPoly::term(c, [0; 4])
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; 4];
        m[v as usize] = 1;
        MPoly::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, monomial: Monomial) -> Self {
        let mut p = MPoly::zero();
        p.add_term(monomial, c.into());
        p
    }

    /// `X^x Y^y Z^z`.
    pub fn monomial(x: u32, y: u32, z: u32) -> Self {
        MPoly::term(1, [x, y, z, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: &Monomial) -> BigInt {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, monomial: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(a + b·V)^exp` expanded with binomial coefficients.
    pub fn binomial_power(a: i64, b: i64, v: Var, exp: u32) -> MPoly {
        let mut p = MPoly::zero();
        let mut choose = BigInt::one();
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        for k in 0..=exp {
            let mut m = [0; 4];
            m[v as usize] = k;
            let c = &choose
                * num_traits::pow(b.clone(), k as usize)
                * num_traits::pow(a.clone(), (exp - k) as usize);
            p.add_term(m, c);
            choose = choose * BigInt::from(exp - k) / BigInt::from(k + 1);
        }
        p
    }

    /// Substitutes a polynomial for every variable.
    pub fn substitute(&self, values: [&MPoly; 4]) -> MPoly {
        let mut cache: [Vec<MPoly>; 4] = Default::default();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut prod = MPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(MPoly::one());
                }
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * values[i];
                    powers.push(next);
                }
                prod = &prod * &powers[e as usize];
            }
            out = out + prod;
        }
        out
    }

    /// Substitutes only `X`, `Y`, `Z`; `t` is left in place.
    pub fn substitute_xyz(&self, x: &MPoly, y: &MPoly, z: &MPoly) -> MPoly {
        self.substitute([x, y, z, &MPoly::var(Var::T)])
    }

    /// Exact evaluation at a rational point `(X, Y, Z, t)`.
    pub fn eval_rational(&self, point: [&BigRational; 4]) -> BigRational {
        let mut sum = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            sum += v;
        }
        sum
    }

    /// Evaluation at an integer point `(X, Y, Z, t)`.
    pub fn eval_integer(&self, point: [i64; 4]) -> BigInt {
        let r = point.map(|v| BigRational::from_integer(BigInt::from(v)));
        let v = self.eval_rational([&r[0], &r[1], &r[2], &r[3]]);
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Maps `C(X, Y, Z)` to `q(t, Y) = C(1, Y, t·Y⁻²)`.
    ///
    /// The result uses the `t` and `Y` slots. Fails if some surviving
    /// monomial `Yⁿ Zᵍ` has `n < 2g`, which cannot happen for the polynomial
    /// of a connected ribbon graph.
    pub fn counting_substitution(&self) -> Result<MPoly, Error> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let [_, y, z, t] = *m;
            if t != 0 {
                return Err(Error::PolyParse("input already contains t".into()));
            }
            if y < 2 * z {
                // X := 1 may still cancel this term against others, so test after collecting.
                let mut collected = BigInt::zero();
                for (m2, c2) in &self.terms {
                    if m2[1] == y && m2[2] == z {
                        collected += c2;
                    }
                }
                if !collected.is_zero() {
                    return Err(Error::NegativeExponent { y, z });
                }
                continue;
            }
            out.add_term([0, y - 2 * z, 0, z], c.clone());
        }
        Ok(out)
    }

    /// Coefficients of `t^0, t^1, ...` in the `Y = 0` part of a
    /// `counting_substitution` result.
    pub fn t_coefficients_at_y0(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            if m[0] == 0 && m[1] == 0 && m[2] == 0 {
                let j = m[3] as usize;
                if out.len() <= j {
                    out.resize(j + 1, BigInt::zero());
                }
                out[j] += c;
            }
        }
        out
    }

    /// Terms in ascending order, e.g. `4 + 7*t + t^2`.
    pub fn to_string_ascending(&self) -> String {
        format_terms(self.terms.iter())
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                x: m[0],
                y: m[1],
                z: m[2],
                t: m[3],
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<MPoly, Error> {
        let mut p = MPoly::zero();
        for t in terms {
            let c = BigInt::from_str(&t.coeff)
                .map_err(|_| Error::PolyParse(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term([t.x, t.y, t.z, t.t], c);
        }
        Ok(p)
    }
}

/// One term of the JSON term-list form; `coeff` is a decimal string so that
/// arbitrarily large values survive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub x: u32,
    pub y: u32,
    pub z: u32,
    #[serde(default)]
    pub t: u32,
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Monomial, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (m, c) in terms {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.iter().all(|&e| e == 0) {
            factors.push(abs.to_string());
        }
        for v in Var::ALL {
            match m[v as usize] {
                0 => {}
                1 => factors.push(v.symbol().to_string()),
                e => factors.push(format!("{}^{}", v.symbol(), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms()))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::PolyParse("empty input".into()));
        }
        let mut p = MPoly::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = BigInt::one();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if !first {
                return Err(Error::PolyParse(format!("expected sign before {rest:?}")));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (c, m) = parse_term(term)?;
            p.add_term(m, sign * c);
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(BigInt, Monomial), Error> {
    if term.is_empty() {
        return Err(Error::PolyParse("empty term".into()));
    }
    let mut c = BigInt::one();
    let mut m = [0u32; 4];
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::PolyParse(format!("empty factor in {term:?}")));
        }
        if factor.chars().all(|ch| ch.is_ascii_digit()) {
            c *= BigInt::from_str(factor).map_err(|e| Error::PolyParse(e.to_string()))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u32>()
                    .map_err(|_| Error::PolyParse(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let v = Var::from_symbol(name)
            .ok_or_else(|| Error::PolyParse(format!("unknown variable {name:?}")))?;
        m[v as usize] += exp;
    }
    Ok((c, m))
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.clone() + rhs.clone()
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.clone() - rhs.clone()
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]];
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |a, b| a * b)
    }
}
