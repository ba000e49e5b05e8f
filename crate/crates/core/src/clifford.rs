//! The Clifford algebra `Cl_d` as reduced words, plus concrete gamma and spin
//! matrices.
//!
//! Words are the engine's source of truth. Matrices back the golden fixtures
//! and the function-application oracle, which must not share code paths with
//! the word algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coeff::{GaussianRational, Rational};
use crate::Error;

/// Largest dimension for which gamma matrices are built.
pub const MAX_GAMMA_DIM: usize = 10;

/// A reduced product `gamma_{i1} gamma_{i2} ...` with `i1 < i2 < ...`,
/// stored as a bitmask (bit `k-1` set when `gamma_k` occurs).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CliffordWord(u16);

impl CliffordWord {
    pub const IDENTITY: CliffordWord = CliffordWord(0);

    pub fn from_bits(bits: u16) -> Self {
        CliffordWord(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// The single generator `gamma_i` (1-based).
    pub fn generator(i: usize) -> Self {
        debug_assert!((1..=16).contains(&i));
        CliffordWord(1 << (i - 1))
    }

    /// Builds a word from strictly increasing 1-based indices.
    pub fn from_indices(indices: &[usize], d: usize) -> Result<Self, Error> {
        let mut bits = 0u16;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i > d {
                return Err(Error::IndexOutOfRange { index: i, d });
            }
            if i <= last {
                return Err(Error::NotReduced);
            }
            last = i;
            bits |= 1 << (i - 1);
        }
        Ok(CliffordWord(bits))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..16).filter(|k| self.0 & (1 << k) != 0).map(|k| k + 1).collect()
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// Highest generator index present, 0 for the identity.
    pub fn max_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    /// Product of reduced words without range checks; returns the word and
    /// `true` when the sign is negative.
    #[inline]
    pub fn mul_unchecked(self, other: CliffordWord) -> (CliffordWord, bool) {
        // Moving each generator of `other` left past the strictly larger
        // generators of `self` costs one sign flip per crossing.
        let mut swaps = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            swaps += (self.0 >> (j + 1)).count_ones();
            b &= b - 1;
        }
        (CliffordWord(self.0 ^ other.0), swaps % 2 == 1)
    }
}

impl fmt::Debug for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("g{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `w1 * w2 = sign * word` in `Cl_d`.
pub fn word_mul(w1: CliffordWord, w2: CliffordWord, d: usize) -> Result<(CliffordWord, i8), Error> {
    for w in [w1, w2] {
        if w.max_index() > d {
            return Err(Error::IndexOutOfRange { index: w.max_index(), d });
        }
    }
    let (w, neg) = w1.mul_unchecked(w2);
    Ok((w, if neg { -1 } else { 1 }))
}

/// Reversal of a word; with Hermitian generators this is its adjoint.
pub fn word_adjoint(w: CliffordWord) -> (CliffordWord, i8) {
    let k = w.len();
    let flips = k * k.saturating_sub(1) / 2;
    (w, if flips % 2 == 0 { 1 } else { -1 })
}

/// Dense square matrix over Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![GaussianRational::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = GaussianRational::ONE;
        }
        m
    }

    /// Builds a matrix from rows of `(re, im)` integer pairs.
    pub fn from_int_pairs(rows: &[&[(i64, i64)]]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (c, &(re, im)) in row.iter().enumerate() {
                m.data[r * n + c] = GaussianRational::new(Rational::from_int(re), Rational::from_int(im));
            }
        }
        m
    }

    pub fn from_entries(n: usize, data: Vec<GaussianRational>) -> Self {
        assert_eq!(data.len(), n * n);
        Matrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.n + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &other.data[k * n + c];
                    if !b.is_zero() {
                        out.data[r * n + c] = &out.data[r * n + c] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        Matrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, k: &GaussianRational) -> Matrix {
        Matrix { n: self.n, data: self.data.iter().map(|a| a * k).collect() }
    }

    pub fn conj_transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.data[c * n + r] = self.data[r * n + c].conj();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar(&self) -> Option<GaussianRational> {
        let c = self.data[0].clone();
        (*self == Self::identity(self.n).scale(&c)).then_some(c)
    }

    /// `[[a, b], [c, e]]` from four equally sized blocks.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, e: &Matrix) -> Matrix {
        let h = a.n;
        let n = 2 * h;
        let mut out = Self::zeros(n);
        for (blk, ro, co) in [(a, 0, 0), (b, 0, h), (c, h, 0), (e, h, h)] {
            assert_eq!(blk.n, h);
            for r in 0..h {
                for col in 0..h {
                    out.data[(r + ro) * n + col + co] = blk.data[r * h + col].clone();
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                let mut acc = GaussianRational::ZERO;
                for (c, x) in v.iter().enumerate() {
                    let a = &self.data[r * self.n + c];
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row-major entries in the fixture notation `a+bi`.
    pub fn render_rows(&self) -> String {
        let mut s = String::new();
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| fixture_entry(self.get(r, c))).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_rows())
    }
}

fn fixture_entry(z: &GaussianRational) -> String {
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

fn parse_fixture_entry(s: &str) -> Option<GaussianRational> {
    let body = s.strip_suffix('i')?;
    // The separator is the last sign not at position 0.
    let pos = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last()?;
    let re = Rational::parse(&body[..pos])?;
    let im = Rational::parse(body[pos..].trim_start_matches('+'))?;
    Some(GaussianRational::new(re, im))
}

pub(crate) fn pauli() -> [Matrix; 3] {
    [
        Matrix::from_int_pairs(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        Matrix::from_int_pairs(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        Matrix::from_int_pairs(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

/// Gamma matrices for one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRep {
    d: usize,
    matrices: Vec<Matrix>,
}

impl GammaRep {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn spinor_dim(&self) -> usize {
        self.matrices[0].size()
    }

    /// `gamma_i`, 1-based.
    pub fn gamma(&self, i: usize) -> &Matrix {
        &self.matrices[i - 1]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Matrix of a reduced word, as the ordered product of its generators.
    pub fn word_matrix(&self, w: CliffordWord) -> Matrix {
        w.indices()
            .into_iter()
            .fold(Matrix::identity(self.spinor_dim()), |acc, i| acc.mul(self.gamma(i)))
    }

    /// Verifies `gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij I`.
    pub fn check_clifford(&self) -> bool {
        let n = self.spinor_dim();
        let two_id = Matrix::identity(n).scale(&GaussianRational::from_int(2));
        for i in 1..=self.d {
            for j in 1..=self.d {
                let anti = self.gamma(i).mul(self.gamma(j)).add(&self.gamma(j).mul(self.gamma(i)));
                let want = if i == j { two_id.clone() } else { Matrix::zeros(n) };
                if anti != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Gamma matrices: Pauli for `d = 2, 3`, the 4x4 blocks for `d = 4, 5`, and
/// for larger `d` the doubling of the representation for `d - 2`.
pub fn gamma_matrices(d: usize) -> Result<GammaRep, Error> {
    if !(2..=MAX_GAMMA_DIM).contains(&d) {
        return Err(Error::DimensionOutOfRange { d, max: MAX_GAMMA_DIM });
    }
    let [s1, s2, s3] = pauli();
    let matrices = match d {
        2 => vec![s1, s2],
        3 => vec![s1, s2, s3],
        4 | 5 => {
            let base = GammaRep { d: 3, matrices: vec![s1, s2, s3] };
            let mut m = double(&base);
            if d == 4 {
                m.pop();
            }
            m
        }
        _ => double(&gamma_matrices(d - 2)?),
    };
    let rep = GammaRep { d, matrices };
    if !rep.check_clifford() {
        return Err(Error::CliffordViolation { d });
    }
    Ok(rep)
}

/// `gamma_i -> [[0, i g_i], [-i g_i, 0]]`, then `[[0, I], [I, 0]]` and
/// `[[I, 0], [0, -I]]` as the two new generators.
fn double(base: &GammaRep) -> Vec<Matrix> {
    let h = base.spinor_dim();
    let zero = Matrix::zeros(h);
    let id = Matrix::identity(h);
    let i = GaussianRational::I;
    let mut out: Vec<Matrix> = base
        .matrices
        .iter()
        .map(|g| Matrix::block(&zero, &g.scale(&i), &g.scale(&-&i), &zero))
        .collect();
    out.push(Matrix::block(&zero, &id, &id, &zero));
    out.push(Matrix::block(&id, &zero, &zero, &id.scale(&GaussianRational::from_int(-1))));
    out
}

/// `S_ij = -(i/4)(gamma_i gamma_j - gamma_j gamma_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinMatrix {
    pub i: usize,
    pub j: usize,
    pub matrix: Matrix,
}

pub fn spin_matrix(rep: &GammaRep, i: usize, j: usize) -> Result<SpinMatrix, Error> {
    let d = rep.d();
    for k in [i, j] {
        if k == 0 || k > d {
            return Err(Error::IndexOutOfRange { index: k, d });
        }
    }
    let comm = rep.gamma(i).mul(rep.gamma(j)).sub(&rep.gamma(j).mul(rep.gamma(i)));
    let factor = GaussianRational::imag(Rational::new(-1, 4));
    Ok(SpinMatrix { i, j, matrix: comm.scale(&factor) })
}

/// One block of the fixture text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureBlock {
    Gamma { d: usize, i: usize, matrix: Matrix },
    Spin { d: usize, i: usize, j: usize, matrix: Matrix },
}

/// Renders all `gamma_i` and `S_ij` (`i < j`) for `d`.
///
/// Blocks are headed `gamma d i` / `spin d i j`, followed by the row-major
/// entries and a blank line.
pub fn render_fixture(d: usize) -> Result<String, Error> {
    let rep = gamma_matrices(d)?;
    let mut out = String::new();
    for i in 1..=d {
        out.push_str(&format!("gamma {d} {i}\n"));
        out.push_str(&rep.gamma(i).render_rows());
        out.push('\n');
    }
    for i in 1..=d {
        for j in i + 1..=d {
            out.push_str(&format!("spin {d} {i} {j}\n"));
            out.push_str(&spin_matrix(&rep, i, j)?.matrix.render_rows());
            out.push('\n');
        }
    }
    Ok(out)
}

/// Parses the fixture text format.
pub fn parse_fixture(text: &str) -> Result<Vec<FixtureBlock>, Error> {
    let mut blocks = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some((ln, line)) = lines.next() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::Fixture { line: ln + 1, message: msg.into() };
        let head: Vec<&str> = line.split_whitespace().collect();
        let nums: Vec<usize> = head[1..].iter().map(|s| s.parse().map_err(|_| bad("bad header"))).collect::<Result<_, _>>()?;
        let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
        while let Some((rl, row)) = lines.peek() {
            let row = row.trim();
            if row.is_empty() {
                break;
            }
            let entries = row
                .split_whitespace()
                .map(|e| parse_fixture_entry(e).ok_or(Error::Fixture { line: rl + 1, message: format!("bad entry {e}") }))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(entries);
            lines.next();
        }
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(bad("matrix is not square"));
        }
        let matrix = Matrix::from_entries(n, rows.into_iter().flatten().collect());
        let block = match (head[0], nums.as_slice()) {
            ("gamma", [d, i]) => FixtureBlock::Gamma { d: *d, i: *i, matrix },
            ("spin", [d, i, j]) => FixtureBlock::Spin { d: *d, i: *i, j: *j, matrix },
            _ => return Err(bad("unknown header")),
        };
        blocks.push(block);
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ix: &[usize]) -> CliffordWord {
        CliffordWord::from_indices(ix, 8).unwrap()
    }

    #[test]
    fn word_mul_examples() {
        assert_eq!(word_mul(w(&[2]), w(&[1]), 2).unwrap(), (w(&[1, 2]), -1));
        assert_eq!(word_mul(w(&[1]), w(&[1]), 2).unwrap(), (CliffordWord::IDENTITY, 1));
        assert_eq!(word_mul(w(&[1, 2]), w(&[2, 3]), 3).unwrap(), (w(&[1, 3]), 1));
        assert!(word_mul(w(&[4]), w(&[1]), 3).is_err());
    }

    #[test]
    fn word_mul_matches_pauli_matrices() {
        // g1g2 * g2g3 computed directly from sigma matrices.
        let rep = gamma_matrices(3).unwrap();
        let lhs = rep.gamma(1).mul(rep.gamma(2)).mul(rep.gamma(2)).mul(rep.gamma(3));
        assert_eq!(lhs, rep.gamma(1).mul(rep.gamma(3)));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(word_adjoint(CliffordWord::IDENTITY), (CliffordWord::IDENTITY, 1));
        assert_eq!(word_adjoint(w(&[1, 2])), (w(&[1, 2]), -1));
        assert_eq!(word_adjoint(w(&[1, 2, 3])), (w(&[1, 2, 3]), -1));
        let rep = gamma_matrices(3).unwrap();
        let m = rep.word_matrix(w(&[1, 2, 3]));
        assert_eq!(m.conj_transpose(), m.scale(&GaussianRational::from_int(-1)));
    }

    #[test]
    fn invalid_words() {
        assert!(CliffordWord::from_indices(&[2, 1], 3).is_err());
        assert!(CliffordWord::from_indices(&[0], 3).is_err());
        assert!(CliffordWord::from_indices(&[4], 3).is_err());
    }

    #[test]
    fn gamma_examples() {
        let [s1, s2, _] = pauli();
        let r2 = gamma_matrices(2).unwrap();
        assert_eq!(r2.matrices(), &[s1, s2]);
        let r5 = gamma_matrices(5).unwrap();
        let id = Matrix::identity(2);
        let z = Matrix::zeros(2);
        assert_eq!(r5.gamma(5), &Matrix::block(&id, &z, &z, &id.scale(&GaussianRational::from_int(-1))));
        let r6 = gamma_matrices(6).unwrap();
        assert_eq!(r6.spinor_dim(), 8);
        assert!(r6.check_clifford());
        assert!(gamma_matrices(1).is_err());
        assert!(gamma_matrices(MAX_GAMMA_DIM + 1).is_err());
    }

    #[test]
    fn spin_examples() {
        let r2 = gamma_matrices(2).unwrap();
        let [_, _, s3] = pauli();
        assert_eq!(spin_matrix(&r2, 1, 2).unwrap().matrix, s3.scale(&GaussianRational::ratio(1, 2)));
        let r3 = gamma_matrices(3).unwrap();
        assert!(spin_matrix(&r3, 1, 1).unwrap().matrix.is_zero());
        let r5 = gamma_matrices(5).unwrap();
        let id = Matrix::identity(2);
        let z = Matrix::zeros(2);
        let want = Matrix::block(&z, &id, &id.scale(&GaussianRational::from_int(-1)), &z)
            .scale(&GaussianRational::imag(Rational::new(1, 2)));
        assert_eq!(spin_matrix(&r5, 4, 5).unwrap().matrix, want);
        assert!(spin_matrix(&r3, 0, 1).is_err());
    }

    #[test]
    fn fixture_round_trip() {
        let text = render_fixture(4).unwrap();
        let blocks = parse_fixture(&text).unwrap();
        assert_eq!(blocks.len(), 4 + 6);
        let rep = gamma_matrices(4).unwrap();
        assert_eq!(blocks[3], FixtureBlock::Gamma { d: 4, i: 4, matrix: rep.gamma(4).clone() });
        assert_eq!(parse_fixture_entry("-1/2-3i"), Some(GaussianRational::new(Rational::new(-1, 2), Rational::from_int(-3))));
        assert_eq!(parse_fixture_entry("0+0i"), Some(GaussianRational::ZERO));
        assert!(parse_fixture("gamma 2 1\n1+0i 0+0i\n").is_err());
    }
}
