//! Table-backed arithmetic for F_q, q = p^e.
//!
//! Elements are residue indices in 0..q: the index encodes the coefficient
//! vector of a polynomial of degree < e over F_p in base p (coefficient of
//! x^i in digit i). Extension fields are built over the lexicographically
//! first monic irreducible polynomial of degree e, found by trial division.
//! Multiplication and inversion go through discrete log/antilog tables for a
//! primitive element; addition is a digit-wise sum (a plain XOR when p = 2).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinat::prime_power_parts;
use crate::error::{Error, Result};

/// Largest supported field order for the log/antilog tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug)]
pub struct FiniteField {
    q: u64,
    p: u64,
    e: u32,
    /// antilog[i] = index of g^i for 0 <= i < q-1
    antilog: Vec<u32>,
    /// log[a] for 1 <= a < q; log[0] is unused
    log: Vec<u32>,
}

impl FiniteField {
    /// Fetch (or build and cache) the field of order `q`.
    pub fn get(q: u64) -> Result<Arc<FiniteField>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FiniteField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&q) {
            return Ok(f.clone());
        }
        let built = Arc::new(FiniteField::build(q)?);
        cache.lock().unwrap().insert(q, built.clone());
        Ok(built)
    }

    fn build(q: u64) -> Result<FiniteField> {
        let (p, e) = prime_power_parts(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge { q });
        }
        let modulus = if e == 1 {
            Vec::new()
        } else {
            first_irreducible(p, e)
        };
        let poly = PolyCtx { p, e, modulus };
        let generator = poly.find_primitive_element(q);

        let order = (q - 1) as usize;
        let mut antilog = vec![0u32; order];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for (i, slot) in antilog.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = poly.mul(acc, generator);
        }
        debug_assert_eq!(acc, 1, "primitive element must have order q-1");
        Ok(FiniteField {
            q,
            p,
            e,
            antilog,
            log,
        })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.e == 1 {
            (((a as u64) + (b as u64)) % self.p) as u32
        } else {
            let p = self.p as u32;
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut scale = 1u32;
            while a != 0 || b != 0 {
                out += ((a % p + b % p) % p) * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if self.e == 1 {
            if a == 0 {
                0
            } else {
                (self.p as u32) - a
            }
        } else {
            let p = self.p as u32;
            let mut a = a;
            let mut out = 0u32;
            let mut scale = 1u32;
            while a != 0 {
                let d = a % p;
                if d != 0 {
                    out += (p - d) * scale;
                }
                a /= p;
                scale *= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let idx = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order;
        self.antilog[idx as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert_ne!(a, 0, "zero has no inverse");
        let order = self.q - 1;
        let idx = (order - self.log[a as usize] as u64) % order;
        self.antilog[idx as usize]
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }
}

/// Polynomial arithmetic over F_p modulo a fixed monic irreducible, used
/// only while the tables are being built.
struct PolyCtx {
    p: u64,
    e: u32,
    /// Coefficients c_0..c_{e-1} of the non-leading part of the modulus
    /// (the leading coefficient is 1). Empty for prime fields.
    modulus: Vec<u64>,
}

impl PolyCtx {
    fn digits(&self, mut idx: u32) -> Vec<u64> {
        let mut out = vec![0u64; self.e as usize];
        for d in out.iter_mut() {
            *d = (idx as u64) % self.p;
            idx /= self.p as u32;
        }
        out
    }

    fn index(&self, digits: &[u64]) -> u32 {
        let mut out = 0u64;
        for &d in digits.iter().rev() {
            out = out * self.p + d;
        }
        out as u32
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (((a as u64) * (b as u64)) % self.p) as u32;
        }
        let e = self.e as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce: x^e = -modulus (mod the irreducible).
        for i in (e..prod.len()).rev() {
            let coeff = prod[i];
            if coeff == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let pos = i - e + j;
                prod[pos] = (prod[pos] + (self.p - m % self.p) % self.p * coeff) % self.p;
            }
        }
        self.index(&prod[..e])
    }

    fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut out = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                out = self.mul(out, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        out
    }

    fn find_primitive_element(&self, q: u64) -> u32 {
        let order = q - 1;
        let factors = prime_factors(order);
        'outer: for candidate in 2..q as u32 {
            for &f in &factors {
                if self.pow(candidate, order / f) == 1 {
                    continue 'outer;
                }
            }
            return candidate;
        }
        // q = 2 has the trivial group; 1 generates it.
        1
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficients c_0..c_{e-1} of the lexicographically first monic
/// irreducible x^e + sum c_i x^i over F_p, by ascending base-p index of the
/// coefficient vector.
fn first_irreducible(p: u64, e: u32) -> Vec<u64> {
    let mut candidate = vec![0u64; e as usize];
    loop {
        if is_irreducible(p, e, &candidate) {
            return candidate;
        }
        let mut i = 0;
        loop {
            assert!(i < candidate.len(), "no irreducible of degree {e} found");
            candidate[i] += 1;
            if candidate[i] < p {
                break;
            }
            candidate[i] = 0;
            i += 1;
        }
    }
}

/// Trial division by every monic polynomial of degree 1..=e/2.
fn is_irreducible(p: u64, e: u32, low: &[u64]) -> bool {
    if low[0] == 0 {
        return false; // divisible by x
    }
    let mut poly = low.to_vec();
    poly.push(1); // monic of degree e
    for deg in 1..=(e / 2) {
        let count = p.pow(deg);
        for idx in 0..count {
            let mut div = Vec::with_capacity(deg as usize + 1);
            let mut t = idx;
            for _ in 0..deg {
                div.push(t % p);
                t /= p;
            }
            div.push(1);
            if divides(p, &div, &poly) {
                return false;
            }
        }
    }
    true
}

/// True iff `div` divides `poly` over F_p (both monic, deg div <= deg poly).
fn divides(p: u64, div: &[u64], poly: &[u64]) -> bool {
    let mut rem = poly.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for (j, &c) in div.iter().enumerate() {
                let pos = shift + j;
                rem[pos] = (rem[pos] + (p - (c * lead) % p) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}
