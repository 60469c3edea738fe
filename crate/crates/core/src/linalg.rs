//! Exact linear algebra over prime fields and the rationals, explicit
//! quiver representations, and Hom/Ext dimensions computed from matrices.

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense row-major matrix. Zero-sized dimensions are allowed; they show up
/// naturally as maps in and out of zero spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn filled(rows: usize, cols: usize, fill: E) -> Self {
        Mat {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Coefficient field as an explicit context object, so the prime is a
/// runtime value rather than a type parameter.
pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn zero(&self) -> Self::Elem {
        self.from_i64(0)
    }
    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;
    fn rank(&self, m: &Mat<Self::Elem>) -> usize;
}

/// Identity matrix over a field.
pub fn identity_mat<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    let mut m = Mat::filled(n, n, f.zero());
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

/// Matrix product a * b.
pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    debug_assert_eq!(a.cols(), b.rows());
    let mut out = Mat::filled(a.rows(), b.cols(), f.zero());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols() {
                let term = f.mul(x, b.get(k, j));
                out.set(i, j, f.add(out.get(i, j), &term));
            }
        }
    }
    out
}

pub const DEFAULT_PRIME: u64 = 32003;

/// F_p for a prime p, elements stored reduced in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        pow_mod(a, self.p - 2, self.p)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.next_u64() % self.p
    }

    fn rank(&self, m: &Mat<u64>) -> usize {
        let p = self.p;
        let mut a = m.clone();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(piv) = (r..a.rows).find(|&i| *a.get(i, c) % p != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..a.cols {
                    let x = *a.get(r, j);
                    let y = *a.get(piv, j);
                    a.set(r, j, y);
                    a.set(piv, j, x);
                }
            }
            let inv_piv = self.inv(*a.get(r, c));
            for i in r + 1..a.rows {
                let factor = mul_mod(*a.get(i, c) % p, inv_piv, p);
                if factor == 0 {
                    continue;
                }
                for j in c..a.cols {
                    let sub = mul_mod(factor, *a.get(r, j) % p, p);
                    let cur = *a.get(i, j) % p;
                    a.set(i, j, (cur + p - sub) % p);
                }
            }
            r += 1;
        }
        r
    }
}

/// The rational field, restricted to matrices with integer entries; every
/// representation constructed here has integer entries, and ranks over the
/// rationals are computed exactly by fraction-free elimination.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigInt;

    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn random(&self, rng: &mut dyn RngCore) -> BigInt {
        // Small integers; the span matters less than exactness.
        BigInt::from((rng.next_u64() % 7) as i64 - 3)
    }

    fn rank(&self, m: &Mat<BigInt>) -> usize {
        // Bareiss elimination: after each step every entry is a minor of
        // the original matrix, so division by the previous pivot is exact.
        let mut a: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m.get(i, j).clone()).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, piv);
            let (top, rest) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                for j in c + 1..m.cols {
                    let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                    row[j] = num / &prev;
                }
                row[c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }
}

/// Representation of a quiver: a space dimension per vertex and one matrix
/// per arrow, stored as dims[head] x dims[tail] acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<E> {
    pub dims: DimVec,
    pub maps: Vec<Mat<E>>,
}

fn dim_usize(d: &DimVec, i: usize) -> usize {
    d[i] as usize
}

impl<E: Clone> Representation<E> {
    pub fn new(q: &Quiver, dims: DimVec, maps: Vec<Mat<E>>) -> Result<Self> {
        dims.validate_for(q.vertex_count())?;
        if maps.len() != q.arrows().len() {
            return Err(Error::RepShape(format!(
                "expected {} maps, found {}",
                q.arrows().len(),
                maps.len()
            )));
        }
        for (k, a) in q.arrows().iter().enumerate() {
            let want = (dim_usize(&dims, a.head), dim_usize(&dims, a.tail));
            let got = (maps[k].rows(), maps[k].cols());
            if want != got {
                return Err(Error::RepShape(format!(
                    "map {} for arrow {} -> {} must be {}x{}, found {}x{}",
                    k + 1,
                    a.tail + 1,
                    a.head + 1,
                    want.0,
                    want.1,
                    got.0,
                    got.1
                )));
            }
        }
        Ok(Representation { dims, maps })
    }

    pub fn zero_map(q: &Quiver, dims: &DimVec, fill: E) -> Result<Self> {
        let maps = q
            .arrows()
            .iter()
            .map(|a| Mat::filled(dim_usize(dims, a.head), dim_usize(dims, a.tail), fill.clone()))
            .collect();
        Representation::new(q, dims.clone(), maps)
    }
}

impl Representation<i64> {
    /// Reinterprets integer entries in another coefficient field.
    pub fn lift<F: Field>(&self, f: &F) -> Representation<F::Elem> {
        Representation {
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.map(|&v| f.from_i64(v))).collect(),
        }
    }
}

/// Representation with independent uniformly random entries, reproducible
/// from the seed alone. The generator is fixed so seeds mean the same
/// thing on every platform.
pub fn random_rep<F: Field>(
    f: &F,
    q: &Quiver,
    dims: &DimVec,
    seed: u64,
) -> Result<Representation<F::Elem>> {
    dims.validate_for(q.vertex_count())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let rows = dim_usize(dims, a.head);
            let cols = dim_usize(dims, a.tail);
            let mut m = Mat::filled(rows, cols, f.zero());
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, f.random(&mut rng));
                }
            }
            m
        })
        .collect();
    Representation::new(q, dims.clone(), maps)
}

/// dim Hom and dim Ext^1 between two explicit representations, from the
/// linear system W_a phi_tail = phi_head V_a over all arrows a: the kernel
/// gives Hom, the cokernel Ext.
pub fn hom_ext_dims<F: Field>(
    f: &F,
    q: &Quiver,
    v: &Representation<F::Elem>,
    w: &Representation<F::Elem>,
) -> (usize, usize) {
    let n = q.vertex_count();
    let vd: Vec<usize> = (0..n).map(|i| dim_usize(&v.dims, i)).collect();
    let wd: Vec<usize> = (0..n).map(|i| dim_usize(&w.dims, i)).collect();
    let mut offsets = vec![0usize; n + 1];
    for i in 0..n {
        offsets[i + 1] = offsets[i] + vd[i] * wd[i];
    }
    let unknowns = offsets[n];
    let crows: usize = q
        .arrows()
        .iter()
        .map(|a| wd[a.head] * vd[a.tail])
        .sum();
    let mut delta = Mat::filled(crows, unknowns, f.zero());
    let mut row0 = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (t, h) = (a.tail, a.head);
        let wa = &w.maps[k];
        let va = &v.maps[k];
        for r in 0..wd[h] {
            for c in 0..vd[t] {
                let row = row0 + r * vd[t] + c;
                // phi_t contributes W_a[r, x] at unknown phi_t[x, c].
                for x in 0..wd[t] {
                    let coeff = wa.get(r, x).clone();
                    if !f.is_zero(&coeff) {
                        delta.set(row, offsets[t] + x * vd[t] + c, coeff);
                    }
                }
                // phi_h contributes -V_a[y, c] at unknown phi_h[r, y].
                for y in 0..vd[h] {
                    let coeff = f.neg(va.get(y, c));
                    if !f.is_zero(&coeff) {
                        delta.set(row, offsets[h] + r * vd[h] + y, coeff);
                    }
                }
            }
        }
        row0 += wd[h] * vd[t];
    }
    let rank = f.rank(&delta);
    (unknowns - rank, crows - rank)
}

pub fn hom_space_dim<F: Field>(
    f: &F,
    q: &Quiver,
    v: &Representation<F::Elem>,
    w: &Representation<F::Elem>,
) -> usize {
    hom_ext_dims(f, q, v, w).0
}

/// Text form of an integer representation: one `map <arrow> <rows> <cols>`
/// header per arrow followed by row-major entries. Arrows with a zero map
/// may be omitted entirely.
pub fn representation_to_text(rep: &Representation<i64>) -> String {
    let mut s = String::new();
    for (k, m) in rep.maps.iter().enumerate() {
        s.push_str(&format!("map {} {} {}\n", k + 1, m.rows(), m.cols()));
        for r in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    s
}

pub fn representation_from_text(
    q: &Quiver,
    dims: &DimVec,
    text: &str,
) -> Result<Representation<i64>> {
    let cleaned: String = text
        .lines()
        .map(|l| match l.find('#') {
            Some(k) => &l[..k],
            None => l,
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut tokens = cleaned.split_whitespace().peekable();
    let mut rep = Representation::zero_map(q, dims, 0i64)?;
    let mut seen = vec![false; q.arrows().len()];
    while let Some(tok) = tokens.next() {
        if tok != "map" {
            return Err(Error::RepShape(format!("expected `map`, found `{tok}`")));
        }
        let mut next_usize = |what: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::RepShape(format!("missing {what}")))?
                .parse()
                .map_err(|_| Error::RepShape(format!("bad {what}")))
        };
        let idx = next_usize("arrow index")?;
        let rows = next_usize("row count")?;
        let cols = next_usize("column count")?;
        if idx < 1 || idx > q.arrows().len() {
            return Err(Error::RepShape(format!(
                "arrow index {idx} out of range 1..={}",
                q.arrows().len()
            )));
        }
        if seen[idx - 1] {
            return Err(Error::RepShape(format!("duplicate map for arrow {idx}")));
        }
        seen[idx - 1] = true;
        let a = q.arrows()[idx - 1];
        let want = (dim_usize(dims, a.head), dim_usize(dims, a.tail));
        if (rows, cols) != want {
            return Err(Error::RepShape(format!(
                "map {idx} must be {}x{}, found {rows}x{cols}",
                want.0, want.1
            )));
        }
        let mut m = Mat::filled(rows, cols, 0i64);
        for r in 0..rows {
            for c in 0..cols {
                let v: i64 = tokens
                    .next()
                    .ok_or_else(|| Error::RepShape(format!("map {idx} is missing entries")))?
                    .parse()
                    .map_err(|_| Error::RepShape(format!("map {idx} has a non-integer entry")))?;
                m.set(r, c, v);
            }
        }
        rep.maps[idx - 1] = m;
    }
    Ok(rep)
}
