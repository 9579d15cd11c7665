//! Finite field F_q with q = p^e, element indices in 0..q.
//!
//! Prime fields use modular arithmetic directly. Extension fields encode an
//! element as the base-p digit string of its polynomial coordinates and
//! multiply through log/antilog tables over a fixed primitive element.

use std::fmt;
use std::sync::Arc;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NonPrime(u64),
    BadDegree(u32),
    OrderTooLarge(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrime(p) => write!(f, "characteristic {p} is not prime"),
            FieldError::BadDegree(e) => write!(f, "extension degree {e} must be at least 1"),
            FieldError::OrderTooLarge(q) => {
                write!(f, "field order {q} exceeds the supported maximum {MAX_FIELD_ORDER}")
            }
        }
    }
}

impl std::error::Error for FieldError {}

struct FieldRepr {
    p: u64,
    e: u32,
    q: u64,
    /// Monic modulus, little-endian coefficients over F_p, length e+1.
    /// For prime fields this is the polynomial x.
    modulus: Vec<u16>,
    /// log[a] for a in 1..q; meaningful only when e >= 2.
    log: Vec<u32>,
    /// antilog[i] = g^i for i in 0..2(q-1); meaningful only when e >= 2.
    antilog: Vec<u16>,
}

/// Handle on a finite field; cheap to clone and share across threads.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldRepr>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec(q={}={}^{})", self.q(), self.p(), self.e())
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        // modulus is deterministic given (p, e), so the order identifies the field
        self.q() == other.q()
    }
}

impl Eq for FieldSpec {}

/// Builds F_{p^e} with the lexicographically least irreducible monic modulus
/// (coefficient tuples compared from the highest degree downwards).
pub fn field_make(p: u64, e: u32) -> Result<FieldSpec, FieldError> {
    if e < 1 {
        return Err(FieldError::BadDegree(e));
    }
    if !is_prime(p) {
        return Err(FieldError::NonPrime(p));
    }
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(p).ok_or(FieldError::OrderTooLarge(u64::MAX))?;
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::OrderTooLarge(q));
        }
    }
    let repr = if e == 1 {
        FieldRepr { p, e, q, modulus: vec![0, 1], log: Vec::new(), antilog: Vec::new() }
    } else {
        let modulus = least_irreducible(p, e);
        let (log, antilog) = build_log_tables(p, e, q, &modulus);
        FieldRepr { p, e, q, modulus, log, antilog }
    };
    Ok(FieldSpec { inner: Arc::new(repr) })
}

impl FieldSpec {
    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u16] {
        &self.inner.modulus
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        let r = &*self.inner;
        if r.e == 1 {
            ((a as u64 + b as u64) % r.p) as u16
        } else if r.p == 2 {
            a ^ b
        } else {
            digitwise(a, b, r.p, r.e, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        let r = &*self.inner;
        if r.e == 1 {
            if a == 0 { 0 } else { (r.p - a as u64) as u16 }
        } else if r.p == 2 {
            a
        } else {
            digitwise(a, 0, r.p, r.e, |x, _, p| (p - x) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        let r = &*self.inner;
        if a == 0 || b == 0 {
            return 0;
        }
        if r.e == 1 {
            ((a as u64 * b as u64) % r.p) as u16
        } else {
            let i = r.log[a as usize] as usize + r.log[b as usize] as usize;
            r.antilog[i]
        }
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "inverse of zero");
        let r = &*self.inner;
        if r.e == 1 {
            mod_inverse(a as u64, r.p) as u16
        } else {
            let n = (r.q - 1) as usize;
            r.antilog[n - r.log[a as usize] as usize]
        }
    }

    pub fn pow(&self, a: u16, mut n: u64) -> u16 {
        let mut acc: u16 = 1;
        let mut base = a;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        (0..self.q()).map(|v| v as u16)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = u16> {
        (1..self.q()).map(|v| v as u16)
    }
}

#[inline]
fn digitwise(a: u16, b: u16, p: u64, e: u32, op: fn(u64, u64, u64) -> u64) -> u16 {
    let mut out: u64 = 0;
    let mut pa = a as u64;
    let mut pb = b as u64;
    let mut place: u64 = 1;
    for _ in 0..e {
        out += op(pa % p, pb % p, p) * place;
        pa /= p;
        pb /= p;
        place *= p;
    }
    out as u16
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime
    let (mut r0, mut r1) = (a as i64, p as i64);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i64) as u64
}

/// Little-endian polynomial arithmetic over F_p for modulus construction.
mod poly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = super::mod_inverse(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = (r[dr] * lead_inv) % p;
            let shift = dr - db;
            for (i, &bc) in b.iter().enumerate() {
                let sub = (c * bc) % p;
                r[i + shift] = (r[i + shift] + p - sub) % p;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }
}

fn decode_poly(t: u64, p: u64, len: u32) -> Vec<u64> {
    let mut v = Vec::with_capacity(len as usize);
    let mut t = t;
    for _ in 0..len {
        v.push(t % p);
        t /= p;
    }
    v
}

fn is_irreducible(cand: &[u64], p: u64) -> bool {
    let e = (cand.len() - 1) as u32;
    // trial division by every monic polynomial of degree 1..=e/2
    for deg in 1..=e / 2 {
        let count = p.pow(deg);
        for t in 0..count {
            let mut div = decode_poly(t, p, deg);
            div.resize(deg as usize + 1, 0);
            div[deg as usize] = 1;
            if poly::rem(cand, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u64, e: u32) -> Vec<u16> {
    // candidates x^e + c_{e-1} x^{e-1} + ... + c_0 ordered by the integer
    // sum c_i p^i, which ranks the tuple (c_{e-1}, ..., c_0) lexicographically
    let count = p.pow(e);
    for t in 0..count {
        let mut cand = decode_poly(t, p, e);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand.iter().map(|&c| c as u16).collect();
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p");
}

fn encode_elem(coeffs: &[u64], p: u64) -> u16 {
    let mut out: u64 = 0;
    for &c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out as u16
}

fn build_log_tables(p: u64, e: u32, q: u64, modulus: &[u16]) -> (Vec<u32>, Vec<u16>) {
    let modl: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    let elem_mul = |a: u16, b: u16| -> u16 {
        let pa = decode_poly(a as u64, p, e);
        let pb = decode_poly(b as u64, p, e);
        let mut prod = poly::mul(&pa, &pb, p);
        if prod.len() > e as usize {
            prod = poly::rem(&prod, &modl, p);
        }
        encode_elem(&prod, p)
    };
    let order = q - 1;
    let prime_factors = distinct_prime_factors(order);
    let elem_pow = |a: u16, mut n: u64| -> u16 {
        let mut acc: u16 = 1;
        let mut base = a;
        while n > 0 {
            if n & 1 == 1 {
                acc = elem_mul(acc, base);
            }
            base = elem_mul(base, base);
            n >>= 1;
        }
        acc
    };
    let mut gen: u16 = 0;
    'search: for cand in 2..q {
        let cand = cand as u16;
        for &f in &prime_factors {
            if elem_pow(cand, order / f) == 1 {
                continue 'search;
            }
        }
        gen = cand;
        break;
    }
    assert!(gen != 0, "multiplicative group of a finite field is cyclic");
    let mut log = vec![0u32; q as usize];
    let mut antilog = vec![0u16; 2 * order as usize];
    let mut cur: u16 = 1;
    for i in 0..order {
        antilog[i as usize] = cur;
        antilog[(i + order) as usize] = cur;
        log[cur as usize] = i as u32;
        cur = elem_mul(cur, gen);
    }
    debug_assert_eq!(cur, 1);
    (log, antilog)
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FieldSpec) {
        let q = f.q() as u16;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "q={} a={}", q, a);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(f.add(a, b), c), f.add(f.mul(a, c), f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for (p, e) in [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (2, 3), (2, 4), (3, 2)] {
            let f = field_make(p, e).unwrap();
            assert_eq!(f.q(), p.pow(e));
            check_axioms(&f);
        }
    }

    #[test]
    fn modulus_choice_is_deterministic() {
        assert_eq!(field_make(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(field_make(2, 2).unwrap().modulus(), &[1, 1, 1]); // x^2+x+1
        assert_eq!(field_make(2, 3).unwrap().modulus(), &[1, 1, 0, 1]); // x^3+x+1
        assert_eq!(field_make(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]); // x^4+x+1
        assert_eq!(field_make(3, 2).unwrap().modulus(), &[1, 0, 1]); // x^2+1
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(field_make(4, 1), Err(FieldError::NonPrime(4)));
        assert_eq!(field_make(1, 1), Err(FieldError::NonPrime(1)));
        assert_eq!(field_make(2, 0), Err(FieldError::BadDegree(0)));
        assert!(matches!(field_make(2, 17), Err(FieldError::OrderTooLarge(_))));
        assert!(field_make(2, 16).is_ok());
    }
}
