//! k-dimensional subspaces of F_q^n in reduced-row-echelon canonical form,
//! subspace codes, the injection distance, Grassmannian enumeration, and
//! uniform sampling.
//!
//! The RREF basis is the unique canonical representative of a subspace:
//! pivot columns strictly increasing, pivot entries 1, zeros above and below
//! each pivot. Equality, hashing, and ordering all go through it. For q = 2
//! with n <= 64 a basis row is a machine word (column j at bit j) and rank
//! computations are XOR eliminations.

use std::collections::BTreeSet;
use std::fmt;

use num::BigUint;
use rand::Rng;

use super::field::FiniteField;
use super::vector::Vector;
use crate::combinat::q_binom;
use crate::error::{Error, Result};
use crate::limits::WorkLimit;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Rows {
    /// One u64 per row, column j at bit j. Only for q = 2, n <= 64.
    Bits(Vec<u64>),
    /// Row-major residues, k rows by n columns.
    Elems(Vec<Vec<u32>>),
}

/// A k-subspace of F_q^n, stored as its RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    q: u64,
    n: u32,
    rows: Rows,
}

fn packs(q: u64, n: u32) -> bool {
    q == 2 && n <= 64
}

// ---- GF(2) word rows ----

/// Forward-eliminate; returns the rank. Destroys `rows`.
fn rank_bits(rows: &mut [u64]) -> u32 {
    let mut rank = 0usize;
    for i in 0..rows.len() {
        let mut r = rows[i];
        // Basis rows are sorted by pivot and a pivot is the least significant
        // set bit, so one ascending pass fully reduces r.
        for &row in rows[..rank].iter() {
            if (r >> row.trailing_zeros()) & 1 == 1 {
                r ^= row;
            }
        }
        if r != 0 {
            rows[rank] = r;
            let mut at = rank;
            while at > 0 && rows[at - 1].trailing_zeros() > r.trailing_zeros() {
                rows.swap(at, at - 1);
                at -= 1;
            }
            rank += 1;
        }
    }
    rank as u32
}

/// Full RREF of a set of independent word rows, sorted by pivot.
fn rref_bits(rows: &mut Vec<u64>) {
    let rank = rank_bits(rows);
    rows.truncate(rank as usize);
    for i in 0..rows.len() {
        let pivot = rows[i].trailing_zeros();
        for j in 0..rows.len() {
            if j != i && (rows[j] >> pivot) & 1 == 1 {
                rows[j] ^= rows[i];
            }
        }
    }
}

// ---- general field rows ----

#[allow(clippy::needless_range_loop)] // parallel row/column index juggling
fn rank_elems(field: &FiniteField, mat: &mut [Vec<u32>], n: u32) -> u32 {
    let mut rank = 0usize;
    for col in 0..n as usize {
        let Some(hit) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, hit);
        let inv = field.inv(mat[rank][col]);
        for c in col..n as usize {
            mat[rank][c] = field.mul(mat[rank][c], inv);
        }
        for r in 0..mat.len() {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in col..n as usize {
                    let t = field.mul(factor, mat[rank][c]);
                    mat[r][c] = field.sub(mat[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank as u32
}

impl Subspace {
    /// Build a subspace from a spanning set of independent rows. The rows
    /// are canonicalized to RREF; linearly dependent input is rejected.
    pub fn from_basis(q: u64, n: u32, basis: &[Vec<u32>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n", "must be positive"));
        }
        if basis.is_empty() {
            return Err(Error::invalid("basis", "must have at least one row"));
        }
        for row in basis {
            if row.len() != n as usize {
                return Err(Error::invalid(
                    "basis",
                    format!("row of length {} in ambient of length {n}", row.len()),
                ));
            }
            if let Some(bad) = row.iter().find(|&&d| d as u64 >= q) {
                return Err(Error::invalid(
                    "basis",
                    format!("residue {bad} is not below q = {q}"),
                ));
            }
        }
        let k = basis.len();
        let rows = if packs(q, n) {
            let mut words: Vec<u64> = basis
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .fold(0u64, |w, (j, &d)| w | ((d as u64) << j))
                })
                .collect();
            rref_bits(&mut words);
            if words.len() != k {
                return Err(Error::invalid("basis", "rows are linearly dependent"));
            }
            Rows::Bits(words)
        } else {
            let field = FiniteField::get(q)?;
            let mut mat: Vec<Vec<u32>> = basis.to_vec();
            let rank = rank_elems(&field, &mut mat, n);
            if rank as usize != k {
                return Err(Error::invalid("basis", "rows are linearly dependent"));
            }
            mat.truncate(k);
            Rows::Elems(mat)
        };
        Ok(Subspace { q, n, rows })
    }

    fn from_rref_unchecked(q: u64, n: u32, rows: Rows) -> Self {
        Subspace { q, n, rows }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension of the subspace.
    pub fn k(&self) -> u32 {
        match &self.rows {
            Rows::Bits(r) => r.len() as u32,
            Rows::Elems(r) => r.len() as u32,
        }
    }

    /// Basis entry at (row, col) of the canonical RREF matrix.
    pub fn entry(&self, row: u32, col: u32) -> u32 {
        match &self.rows {
            Rows::Bits(r) => ((r[row as usize] >> col) & 1) as u32,
            Rows::Elems(r) => r[row as usize][col as usize],
        }
    }

    fn basis_digits(&self) -> Vec<Vec<u32>> {
        (0..self.k())
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// All q^k member vectors (test-oriented; exponential in k).
    pub fn vectors(&self) -> Result<Vec<Vector>> {
        let k = self.k() as usize;
        let basis = self.basis_digits();
        let mut out = Vec::new();
        match &self.rows {
            Rows::Bits(rows) => {
                for mask in 0u64..(1 << k) {
                    let mut w = 0u64;
                    for (i, row) in rows.iter().enumerate() {
                        if (mask >> i) & 1 == 1 {
                            w ^= row;
                        }
                    }
                    // Word layout is column j at bit j; Vector wants digits.
                    let digits: Vec<u32> =
                        (0..self.n).map(|j| ((w >> j) & 1) as u32).collect();
                    out.push(Vector::new(self.q, &digits)?);
                }
            }
            Rows::Elems(_) => {
                let field = FiniteField::get(self.q)?;
                let mut coeffs = vec![0u32; k];
                loop {
                    let mut acc = vec![0u32; self.n as usize];
                    for (i, c) in coeffs.iter().enumerate() {
                        if *c != 0 {
                            for j in 0..self.n as usize {
                                let t = field.mul(*c, basis[i][j]);
                                acc[j] = field.add(acc[j], t);
                            }
                        }
                    }
                    out.push(Vector::new(self.q, &acc)?);
                    let mut i = 0;
                    loop {
                        if i == k {
                            return Ok(out);
                        }
                        coeffs[i] += 1;
                        if (coeffs[i] as u64) < self.q {
                            break;
                        }
                        coeffs[i] = 0;
                        i += 1;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        if v.q() != self.q || v.n() != self.n {
            return Err(Error::AmbientMismatch(format!(
                "vector of F_{}^{} against subspace of F_{}^{}",
                v.q(),
                v.n(),
                self.q,
                self.n
            )));
        }
        match &self.rows {
            Rows::Bits(rows) => {
                let mut w = (0..self.n).fold(0u64, |acc, j| acc | ((v.digit(j) as u64) << j));
                for row in rows {
                    let pivot = row.trailing_zeros();
                    if (w >> pivot) & 1 == 1 {
                        w ^= row;
                    }
                }
                Ok(w == 0)
            }
            Rows::Elems(rows) => {
                let field = FiniteField::get(self.q)?;
                let mut res: Vec<u32> = v.digits();
                for row in rows {
                    let pivot = row.iter().position(|&x| x != 0).expect("nonzero row");
                    let c = res[pivot];
                    if c != 0 {
                        for j in pivot..self.n as usize {
                            let t = field.mul(c, row[j]);
                            res[j] = field.sub(res[j], t);
                        }
                    }
                }
                Ok(res.iter().all(|&x| x == 0))
            }
        }
    }

    /// Parse the canonical `row;row;...` text form.
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        let rows: Vec<Vec<u32>> = text
            .trim()
            .split(';')
            .map(|part| Vector::parse(q, part).map(|v| v.digits()))
            .collect::<Result<_>>()?;
        let n = rows.first().map(|r| r.len()).unwrap_or(0) as u32;
        Subspace::from_basis(q, n, &rows)
    }
}

impl fmt::Display for Subspace {
    /// Canonical text form: RREF rows as digit strings, semicolon-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.k() {
            if i > 0 {
                write!(f, ";")?;
            }
            let digits: Vec<u32> = (0..self.n).map(|j| self.entry(i, j)).collect();
            let row = Vector::new(self.q, &digits).expect("canonical row");
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Injection distance `k - dim(X intersect Y)`, computed as
/// `rank([X; Y]) - k`. Both subspaces must share the ambient (q, k, n).
pub fn injection_distance(x: &Subspace, y: &Subspace) -> Result<u32> {
    if x.q != y.q || x.n != y.n || x.k() != y.k() {
        return Err(Error::AmbientMismatch(format!(
            "G_{}({}, {}) vs G_{}({}, {})",
            x.q,
            x.k(),
            x.n,
            y.q,
            y.k(),
            y.n
        )));
    }
    let k = x.k();
    let rank = match (&x.rows, &y.rows) {
        (Rows::Bits(a), Rows::Bits(b)) => {
            let mut stacked: Vec<u64> = a.iter().chain(b.iter()).copied().collect();
            rank_bits(&mut stacked)
        }
        (Rows::Elems(a), Rows::Elems(b)) => {
            let field = FiniteField::get(x.q)?;
            let mut stacked: Vec<Vec<u32>> = a.iter().chain(b.iter()).cloned().collect();
            rank_elems(&field, &mut stacked, x.n)
        }
        _ => unreachable!("representation is determined by the ambient"),
    };
    Ok(rank - k)
}

/// A subspace code: a set of distinct k-subspaces of a common F_q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceCode {
    q: u64,
    n: u32,
    k: u32,
    elements: BTreeSet<Subspace>,
}

impl SubspaceCode {
    pub fn new(
        q: u64,
        k: u32,
        n: u32,
        members: impl IntoIterator<Item = Subspace>,
    ) -> Result<Self> {
        let mut elements = BTreeSet::new();
        let mut provided = 0usize;
        for s in members {
            if s.q() != q || s.n() != n || s.k() != k {
                return Err(Error::AmbientMismatch(format!(
                    "subspace of G_{}({}, {}) in a code over G_{q}({k}, {n})",
                    s.q(),
                    s.k(),
                    s.n()
                )));
            }
            provided += 1;
            elements.insert(s);
        }
        if elements.len() != provided {
            return Err(Error::invalid("code", "duplicate subspaces"));
        }
        if elements.is_empty() {
            return Err(Error::invalid("code", "must be non-empty"));
        }
        Ok(SubspaceCode { q, n, k, elements })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subspace> {
        self.elements.iter()
    }

    /// Minimum injection distance over unordered pairs of distinct members.
    pub fn min_distance(&self) -> Result<u32> {
        if self.elements.len() < 2 {
            return Err(Error::invalid(
                "code",
                "minimum distance needs two subspaces",
            ));
        }
        let members: Vec<&Subspace> = self.elements.iter().collect();
        let mut best = u32::MAX;
        for (i, x) in members.iter().enumerate() {
            for y in &members[i + 1..] {
                best = best.min(injection_distance(x, y)?);
            }
        }
        Ok(best)
    }

    /// True iff the members pairwise intersect trivially, i.e. the minimum
    /// injection distance equals k.
    pub fn is_partial_spread(&self) -> Result<bool> {
        Ok(self.min_distance()? == self.k)
    }
}

impl fmt::Display for SubspaceCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.elements {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Grassmannian cardinality `[n choose k]_q`.
pub fn grassmannian_size(q: u64, k: u32, n: u32) -> Result<BigUint> {
    q_binom(n, k as i64, q)
}

/// Every k-subspace of F_q^n exactly once, as canonical RREF matrices,
/// ordered by pivot-column pattern (lexicographic) and then by free entries
/// (last free cell varies fastest).
pub fn enumerate_grassmannian(q: u64, k: u32, n: u32, limit: &WorkLimit) -> Result<Vec<Subspace>> {
    if k == 0 || k > n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n, got k={k}, n={n}"),
        ));
    }
    let total = limit.check_objects(
        &grassmannian_size(q, k, n)?,
        "enumerating the Grassmannian",
    )? as usize;
    if !packs(q, n) {
        FiniteField::get(q)?; // validate q and warm the table cache
    }
    let mut out = Vec::with_capacity(total);

    // Lexicographically first pivot pattern.
    let mut pivots: Vec<u32> = (0..k).collect();
    loop {
        emit_pattern(q, k, n, &pivots, &mut out);

        // Next k-combination of columns in lexicographic order.
        let mut i = k as usize;
        loop {
            if i == 0 {
                debug_assert_eq!(out.len(), total);
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n - (k - i as u32) {
                pivots[i] += 1;
                for j in i + 1..k as usize {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn emit_pattern(q: u64, k: u32, n: u32, pivots: &[u32], out: &mut Vec<Subspace>) {
    // Free cells in row-major order: (i, j) with j > pivots[i], j not a pivot.
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n as usize];
        for &p in pivots {
            v[p as usize] = true;
        }
        v
    };
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in (p + 1)..n {
            if !is_pivot[j as usize] {
                cells.push((i as u32, j));
            }
        }
    }
    let mut values = vec![0u32; cells.len()];
    loop {
        if packs(q, n) {
            let mut rows = vec![0u64; k as usize];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i] |= 1u64 << p;
            }
            for (&(i, j), &v) in cells.iter().zip(&values) {
                rows[i as usize] |= (v as u64) << j;
            }
            out.push(Subspace::from_rref_unchecked(q, n, Rows::Bits(rows)));
        } else {
            let mut rows = vec![vec![0u32; n as usize]; k as usize];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p as usize] = 1;
            }
            for (&(i, j), &v) in cells.iter().zip(&values) {
                rows[i as usize][j as usize] = v;
            }
            out.push(Subspace::from_rref_unchecked(q, n, Rows::Elems(rows)));
        }
        // Odometer with the last free cell moving fastest.
        let mut i = cells.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            values[i] += 1;
            if (values[i] as u64) < q {
                break;
            }
            values[i] = 0;
        }
    }
}

/// Sample a uniform k-subspace of F_q^n: draw k x n matrices uniformly until
/// one has rank k, then canonicalize. Every subspace has exactly |GL_k(F_q)|
/// full-rank matrices above it, so acceptance is exactly uniform; the
/// acceptance probability exceeds 1/4 for all valid parameters.
pub fn sample_subspace_uniform<R: Rng + ?Sized>(
    q: u64,
    k: u32,
    n: u32,
    rng: &mut R,
) -> Result<Subspace> {
    if k == 0 || k > n {
        return Err(Error::invalid(
            "k",
            format!("must satisfy 1 <= k <= n, got k={k}, n={n}"),
        ));
    }
    if packs(q, n) {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        loop {
            let rows: Vec<u64> = (0..k).map(|_| rng.random::<u64>() & mask).collect();
            let mut probe = rows.clone();
            if rank_bits(&mut probe) == k {
                let mut canonical = rows;
                rref_bits(&mut canonical);
                return Ok(Subspace::from_rref_unchecked(q, n, Rows::Bits(canonical)));
            }
        }
    }
    let field = FiniteField::get(q)?;
    loop {
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..n).map(|_| rng.random_range(0..q) as u32).collect())
            .collect();
        let mut mat = rows.clone();
        if rank_elems(&field, &mut mat, n) == k {
            mat.truncate(k as usize);
            return Ok(Subspace::from_rref_unchecked(q, n, Rows::Elems(mat)));
        }
    }
}

/// Sample a uniformly random S-subset of G_q(k, n) by rejecting duplicate
/// canonical forms.
pub fn sample_subspace_code_uniform<R: Rng + ?Sized>(
    q: u64,
    k: u32,
    n: u32,
    size: usize,
    rng: &mut R,
) -> Result<SubspaceCode> {
    if size < 2 {
        return Err(Error::invalid("S", "need at least two subspaces"));
    }
    if BigUint::from(size) > grassmannian_size(q, k, n)? {
        return Err(Error::invalid(
            "S",
            format!(
                "cannot pick {size} distinct subspaces out of {}",
                grassmannian_size(q, k, n)?
            ),
        ));
    }
    let mut set = BTreeSet::new();
    while set.len() < size {
        set.insert(sample_subspace_uniform(q, k, n, rng)?);
    }
    SubspaceCode::new(q, k, n, set)
}
