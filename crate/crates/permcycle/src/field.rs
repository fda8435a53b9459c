//! Exact arithmetic in F_q for odd prime powers q.
//!
//! Elements are identified by their integer encoding `sum coeffs[i] * p^i`
//! in `[0, q-1]`; for prime fields the encoding is the residue itself.
//! All operations are pure and a [`Field`] is immutable once built, so a
//! `FieldRef` can be shared freely across threads.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Shared handle to an immutable field description.
pub type FieldRef = Arc<Field>;

/// A finite field F_q, q = p^k with p an odd prime.
#[derive(Debug)]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, k+1 coefficients, least degree first. None for k = 1.
    modulus: Option<Vec<u64>>,
    /// Prime factorization of q-1 as (prime, exponent) pairs.
    factors: Vec<(u64, u32)>,
    /// Smallest-encoding element of order q-1.
    generator: u64,
    /// Lazily built table of g^e for e in [0, q-2].
    powers: OnceLock<Vec<u64>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for Field {}

/// Deterministic trial-division primality check; desk scale only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Field {
    /// Builds the prime field F_p.
    pub fn prime(p: u64) -> Result<FieldRef> {
        if p % 2 == 0 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut f = Field {
            p,
            k: 1,
            q: p,
            modulus: None,
            factors: factorize(p - 1),
            generator: 0,
            powers: OnceLock::new(),
        };
        f.generator = f.find_generator_scan();
        Ok(Arc::new(f))
    }

    /// Builds the extension field F_{p^k}. When no modulus is supplied the
    /// monic irreducible of degree k with smallest non-leading-coefficient
    /// encoding is selected by deterministic scan.
    pub fn extension(p: u64, k: u32, modulus: Option<Vec<u64>>) -> Result<FieldRef> {
        if p % 2 == 0 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::BadParameter("extension degree must be >= 1".into()));
        }
        if k == 1 {
            if let Some(m) = &modulus {
                if m.len() > 2 || (m.len() == 2 && m[1] != 1) {
                    return Err(Error::BadParameter("modulus must be monic degree 1".into()));
                }
            }
            return Field::prime(p);
        }
        let q = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p)).ok_or_else(|| {
            Error::BadParameter("p^k overflows; field is beyond desk scale".into())
        })?;
        let modulus = match modulus {
            Some(mut m) => {
                // Accept k non-leading coefficients or k+1 with a leading 1.
                if m.len() == k as usize {
                    m.push(1);
                }
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(Error::BadParameter(format!(
                        "modulus must be monic of degree {k}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::BadParameter("modulus coefficients must lie in [0, p-1]".into()));
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => default_modulus(p, k, q),
        };
        let mut f = Field {
            p,
            k,
            q,
            modulus: Some(modulus),
            factors: factorize(q - 1),
            generator: 0,
            powers: OnceLock::new(),
        };
        f.generator = f.find_generator_scan();
        Ok(Arc::new(f))
    }

    /// Builds F_q from q alone by prime-power decomposition.
    pub fn from_order(q: u64) -> Result<FieldRef> {
        if q % 2 == 0 {
            return Err(Error::EvenCharacteristic);
        }
        let fac = factorize(q);
        if fac.len() != 1 {
            return Err(Error::NotPrime(q));
        }
        let (p, k) = fac[0];
        if k == 1 {
            Field::prime(p)
        } else {
            Field::extension(p, k, None)
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    /// Order of the multiplicative group, q-1.
    pub fn group_order(&self) -> u64 {
        self.q - 1
    }
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }
    pub fn q_minus_1_factors(&self) -> &[(u64, u32)] {
        &self.factors
    }
    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Coefficient vector of an encoding, least degree first, length k.
    pub fn decode(&self, mut enc: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(enc % self.p);
            enc /= self.p;
        }
        out
    }

    /// Inverse of [`Field::decode`].
    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut enc = 0;
        for &c in coeffs.iter().rev() {
            enc = enc * self.p + c % self.p;
        }
        enc
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut x, y) = (self.decode(a), self.decode(b));
        for (xi, yi) in x.iter_mut().zip(y) {
            *xi += yi;
            if *xi >= self.p {
                *xi -= self.p;
            }
        }
        self.encode(&x)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut x = self.decode(a);
        for xi in x.iter_mut() {
            if *xi != 0 {
                *xi = self.p - *xi;
            }
        }
        self.encode(&x)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return mulmod(a, b, self.p);
        }
        let k = self.k as usize;
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(xi, yj, self.p)) % self.p;
            }
        }
        let m = self.modulus.as_ref().unwrap();
        // t^k = -(m[0] + m[1] t + ... + m[k-1] t^{k-1})
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                if m[j] != 0 {
                    let sub = mulmod(c, m[j], self.p);
                    let cur = prod[i - k + j];
                    prod[i - k + j] = if cur >= sub { cur - sub } else { cur + self.p - sub };
                }
            }
        }
        self.encode(&prod[..k])
    }

    /// Square-and-multiply exponentiation; 0^0 = 1.
    pub fn pow(&self, a: u64, mut n: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Least n >= 1 with a^n = 1, by stripping prime factors from q-1.
    pub fn element_order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut n = self.q - 1;
        for &(l, e) in &self.factors {
            for _ in 0..e {
                if n % l == 0 && self.pow(a, n / l) == 1 {
                    n /= l;
                } else {
                    break;
                }
            }
        }
        Ok(n)
    }

    fn is_generator(&self, x: u64) -> bool {
        x != 0
            && self
                .factors
                .iter()
                .all(|&(l, _)| self.pow(x, (self.q - 1) / l) != 1)
    }

    fn find_generator_scan(&self) -> u64 {
        (1..self.q)
            .find(|&x| self.is_generator(x))
            .expect("cyclic group always has a generator")
    }

    /// The element of order q-1 with smallest encoding.
    pub fn find_generator(&self) -> u64 {
        self.generator
    }

    /// All elements of order exactly m, sorted by encoding. Empty unless m | q-1.
    pub fn elements_of_order(&self, m: u64) -> Vec<u64> {
        if m == 0 || (self.q - 1) % m != 0 {
            return Vec::new();
        }
        let base = self.pow(self.generator, (self.q - 1) / m);
        let mut out = Vec::new();
        let mut cur = 1;
        for t in 0..m {
            if t > 0 {
                cur = self.mul(cur, base);
            }
            if gcd(t, m) == 1 || m == 1 {
                out.push(cur);
            }
        }
        out.sort_unstable();
        out
    }

    /// The subgroup of order m (all x with x^m = 1), sorted by encoding.
    pub fn subgroup(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || (self.q - 1) % m != 0 {
            return Err(Error::BadDivisibility(format!("{m} does not divide q-1")));
        }
        let base = self.pow(self.generator, (self.q - 1) / m);
        let mut out = Vec::with_capacity(m as usize);
        let mut cur = 1;
        for t in 0..m {
            if t > 0 {
                cur = self.mul(cur, base);
            }
            out.push(cur);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// g^{(q-1)/r}: the canonical element of order r.
    pub fn root_of_unity(&self, r: u64) -> Result<u64> {
        if r == 0 || (self.q - 1) % r != 0 {
            return Err(Error::OrderNotDividing(r));
        }
        Ok(self.pow(self.generator, (self.q - 1) / r))
    }

    /// Baby-step/giant-step discrete logarithm to base g.
    pub fn discrete_log(&self, x: u64) -> Result<u64> {
        if x == 0 {
            return Err(Error::ZeroLog);
        }
        let n = self.q - 1;
        let s = (n as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(s as usize);
        let mut cur = 1;
        for j in 0..s {
            baby.entry(cur).or_insert(j);
            cur = self.mul(cur, self.generator);
        }
        let giant = self.inv(self.pow(self.generator, s))?;
        let mut cur = x;
        for i in 0..=n / s {
            if let Some(&j) = baby.get(&cur) {
                return Ok((i * s + j) % n);
            }
            cur = self.mul(cur, giant);
        }
        unreachable!("BSGS covers the full group")
    }

    /// Table of g^e for e in [0, q-2], built once per field.
    pub fn generator_powers(&self) -> &[u64] {
        self.powers.get_or_init(|| {
            let n = (self.q - 1) as usize;
            let mut t = Vec::with_capacity(n);
            let mut cur = 1;
            for _ in 0..n {
                t.push(cur);
                cur = self.mul(cur, self.generator);
            }
            t
        })
    }

    /// Parses an element in text form: decimal residue (prime field) or
    /// coefficient list "a0,a1,..." (extension), "enc:N" integer encoding,
    /// or "g^E" power-of-generator notation.
    pub fn parse_element(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("enc:") {
            let enc: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::BadElement(s.to_string()))?;
            if enc >= self.q {
                return Err(Error::BadElement(format!("encoding {enc} out of range")));
            }
            return Ok(enc);
        }
        if let Some(rest) = s.strip_prefix("g^") {
            let e: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::BadElement(s.to_string()))?;
            return Ok(self.pow(self.generator, e % (self.q - 1)));
        }
        if s == "g" {
            return Ok(self.generator);
        }
        let coeffs: Vec<u64> = s
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::BadElement(s.to_string()))?;
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadElement(s.to_string()));
        }
        Ok(self.encode(&coeffs))
    }

    /// Canonical text form emitted in outputs: decimal residue for prime
    /// fields, "enc:N" for extensions.
    pub fn format_element(&self, enc: u64) -> String {
        if self.k == 1 {
            enc.to_string()
        } else {
            format!("enc:{enc}")
        }
    }
}

/// Polynomial remainder of `a` by monic `b` over F_p; both least degree first.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > db {
        let lead = *r.last().unwrap();
        let deg = r.len() - 1;
        if lead != 0 {
            for j in 0..db {
                let sub = mulmod(lead, b[j], p);
                let idx = deg - db + j;
                r[idx] = if r[idx] >= sub { r[idx] - sub } else { r[idx] + p - sub };
            }
        }
        r.pop();
        while r.len() > db && *r.last().unwrap() == 0 {
            if r.len() == 1 {
                break;
            }
            r.pop();
        }
    }
    r
}

/// Exhaustive trial division by every monic polynomial of degree <= k/2.
/// Correct and fast at desk scale (k <= 4).
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for c in 0..count {
            let mut cand = Vec::with_capacity(deg + 1);
            let mut v = c;
            for _ in 0..deg {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            let r = poly_rem(m, &cand, p);
            if r.iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u64, k: u32, q: u64) -> Vec<u64> {
    for c in 0..q {
        let mut m = Vec::with_capacity(k as usize + 1);
        let mut v = c;
        for _ in 0..k {
            m.push(v % p);
            v /= p;
        }
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible monic polynomial of every degree exists over F_p")
}
