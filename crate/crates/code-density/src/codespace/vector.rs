//! Vectors of F_q^n (any alphabet size q >= 2) and block codes.
//!
//! For q = 2 with n <= 64 a vector packs into a single machine word and the
//! Hamming distance is a popcount of the XOR; this is the hot path of the
//! Monte Carlo estimator. Everything else stores one u32 residue per
//! coordinate. The representation is chosen per ambient, so equality,
//! ordering, and hashing stay consistent.

use std::collections::BTreeSet;
use std::fmt;

use num::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::limits::WorkLimit;

/// The byte layout giving lexicographic order: coordinate i sits at bit
/// n-1-i, so the numeric order of the words equals the digit-string order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    Bits { n: u32, word: u64 },
    Digits(Vec<u32>),
}

/// A vector of F_q^n: exactly n coordinates, each a residue below q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    q: u64,
    repr: Repr,
}

fn packs(q: u64, n: u32) -> bool {
    q == 2 && n <= 64
}

impl Vector {
    pub fn new(q: u64, digits: &[u32]) -> Result<Self> {
        if q < 2 {
            return Err(Error::invalid("q", format!("must be at least 2, got {q}")));
        }
        if q > u32::MAX as u64 {
            return Err(Error::invalid("q", "alphabet size above 2^32 is unsupported"));
        }
        if digits.is_empty() {
            return Err(Error::invalid("n", "vector length must be positive"));
        }
        if let Some(bad) = digits.iter().find(|&&d| d as u64 >= q) {
            return Err(Error::invalid(
                "coordinate",
                format!("residue {bad} is not below q = {q}"),
            ));
        }
        let n = digits.len() as u32;
        let repr = if packs(q, n) {
            let mut word = 0u64;
            for &d in digits {
                word = (word << 1) | d as u64;
            }
            Repr::Bits { n, word }
        } else {
            Repr::Digits(digits.to_vec())
        };
        Ok(Vector { q, repr })
    }

    pub(crate) fn from_word(n: u32, word: u64) -> Self {
        debug_assert!(n <= 64);
        Vector {
            q: 2,
            repr: Repr::Bits { n, word },
        }
    }

    pub fn zero(q: u64, n: u32) -> Result<Self> {
        Vector::new(q, &vec![0; n as usize])
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        match &self.repr {
            Repr::Bits { n, .. } => *n,
            Repr::Digits(d) => d.len() as u32,
        }
    }

    pub fn digit(&self, i: u32) -> u32 {
        match &self.repr {
            Repr::Bits { n, word } => ((word >> (n - 1 - i)) & 1) as u32,
            Repr::Digits(d) => d[i as usize],
        }
    }

    pub fn digits(&self) -> Vec<u32> {
        (0..self.n()).map(|i| self.digit(i)).collect()
    }

    /// Parse the canonical text form produced by `Display`.
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        let digits: Vec<u32> = if q <= 36 {
            text.trim()
                .chars()
                .map(|c| {
                    c.to_digit(36).ok_or_else(|| {
                        Error::invalid("vector", format!("bad digit {c:?}"))
                    })
                })
                .collect::<Result<_>>()?
        } else {
            text.trim()
                .split(',')
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::invalid("vector", format!("bad coordinate {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        Vector::new(q, &digits)
    }
}

impl fmt::Display for Vector {
    /// Canonical text form: a compact digit string (0-9 then a-z) for
    /// q <= 36, comma-separated decimal residues otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 36 {
            for i in 0..self.n() {
                let d = self.digit(i);
                let c = std::char::from_digit(d, 36).expect("residue below 36");
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = (0..self.n()).map(|i| self.digit(i).to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Hamming distance: the number of coordinates where the vectors differ.
/// The two vectors must live in the same ambient space.
pub fn hamming_distance(x: &Vector, y: &Vector) -> Result<u32> {
    if x.q != y.q || x.n() != y.n() {
        return Err(Error::AmbientMismatch(format!(
            "F_{}^{} vs F_{}^{}",
            x.q,
            x.n(),
            y.q,
            y.n()
        )));
    }
    Ok(match (&x.repr, &y.repr) {
        (Repr::Bits { word: a, .. }, Repr::Bits { word: b, .. }) => (a ^ b).count_ones(),
        (Repr::Digits(a), Repr::Digits(b)) => {
            a.iter().zip(b).filter(|(u, v)| u != v).count() as u32
        }
        _ => unreachable!("representation is determined by the ambient"),
    })
}

/// A block code: a set of at least two distinct vectors of a common F_q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    q: u64,
    n: u32,
    elements: BTreeSet<Vector>,
}

impl Code {
    pub fn new(q: u64, n: u32, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut elements = BTreeSet::new();
        let mut provided = 0usize;
        for v in vectors {
            if v.q() != q || v.n() != n {
                return Err(Error::AmbientMismatch(format!(
                    "vector of F_{}^{} in a code over F_{}^{}",
                    v.q(),
                    v.n(),
                    q,
                    n
                )));
            }
            provided += 1;
            elements.insert(v);
        }
        if elements.len() != provided {
            return Err(Error::invalid("code", "duplicate vectors"));
        }
        if elements.len() < 2 {
            return Err(Error::invalid("code", "a code has at least two vectors"));
        }
        Ok(Code { q, n, elements })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vector> {
        self.elements.iter()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.elements.contains(v)
    }

    /// Minimum Hamming distance over all unordered pairs of distinct
    /// elements.
    pub fn min_distance(&self) -> Result<u32> {
        let members: Vec<&Vector> = self.elements.iter().collect();
        if members.len() < 2 {
            return Err(Error::invalid("code", "minimum distance needs two vectors"));
        }
        let mut best = u32::MAX;
        for (i, x) in members.iter().enumerate() {
            for y in &members[i + 1..] {
                best = best.min(hamming_distance(x, y)?);
            }
        }
        Ok(best)
    }
}

impl fmt::Display for Code {
    /// Canonical text form: the sorted member vectors, newline-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.elements {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Total number of vectors, `q^n`.
pub fn space_size(q: u64, n: u32) -> BigUint {
    BigUint::from(q).pow(n)
}

/// All q^n vectors of F_q^n in lexicographic order. Fails upfront when the
/// space exceeds the object work limit.
pub fn enumerate_vectors(q: u64, n: u32, limit: &WorkLimit) -> Result<Vec<Vector>> {
    if q < 2 || q > u32::MAX as u64 {
        return Err(Error::invalid("q", format!("unsupported alphabet size {q}")));
    }
    if n == 0 {
        return Err(Error::invalid("n", "must be positive"));
    }
    let total = limit.check_objects(&space_size(q, n), "enumerating vectors")? as usize;
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0u32; n as usize];
    loop {
        out.push(Vector::new(q, &digits).expect("valid digits"));
        // Lexicographic odometer: bump the last coordinate first.
        let mut i = n as usize;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if (digits[i] as u64) < q {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Sample one uniform vector of F_q^n.
pub fn sample_vector_uniform<R: Rng + ?Sized>(q: u64, n: u32, rng: &mut R) -> Vector {
    if packs(q, n) {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Vector::from_word(n, rng.random::<u64>() & mask)
    } else {
        let digits: Vec<u32> = (0..n).map(|_| rng.random_range(0..q) as u32).collect();
        Vector::new(q, &digits).expect("residues below q")
    }
}

/// Sample a uniformly random S-subset of F_q^n by rejection of duplicates.
/// Every S-subset is equally likely.
pub fn sample_code_uniform<R: Rng + ?Sized>(
    q: u64,
    n: u32,
    size: usize,
    rng: &mut R,
) -> Result<Code> {
    if size < 2 {
        return Err(Error::invalid("S", "need at least two vectors"));
    }
    if BigUint::from(size) > space_size(q, n) {
        return Err(Error::invalid(
            "S",
            format!("cannot pick {size} distinct vectors out of q^n = {}", space_size(q, n)),
        ));
    }
    let mut set = BTreeSet::new();
    while set.len() < size {
        set.insert(sample_vector_uniform(q, n, rng));
    }
    Code::new(q, n, set)
}
