//! Lower-triangular exact coefficient tables.
//!
//! | kind | entry | rows | columns |
//! |------|-------|------|---------|
//! | `G`  | g_{k,N}  | N = 1..=N_max+1 | k = 1..=N |
//! | `H`  | h_{k,N}  | N = 1..=N_max   | k = 1..=N |
//! | `C`  | c_{N,k}  | N = 0..=N_max   | k = 0..=N |
//! | `D`  | d_{N,k}  | N = 1..=N_max   | k = 1..=N |
//! | `U`, `V` | u_{N,k}, v_{N,k} | N = 0..=N_max | k = 0..=N |
//! | `X`, `Y` | x_{N,k}, y_{N,k} | N = 1..=N_max | k = 1..=N |
//! | `DN(n)`  | d_n(p, 2k) | p = 0..n-1 | k = 0..=p |

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Mutex, OnceLock};

use rug::ops::Pow;
use rug::{Integer, Rational};

use super::numbers::{binomial, central_binomial, factorial, pow2};
use crate::error::{Error, Result};

/// Which coefficient family a [`CoeffTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    G,
    H,
    C,
    D,
    U,
    V,
    X,
    Y,
    /// Reduction coefficients d_n(p, 2k) for a fixed n ≥ 2.
    DN(u32),
}

impl TableKind {
    /// Lowest row and column index used by the family.
    pub fn base_index(self) -> u32 {
        match self {
            TableKind::C | TableKind::U | TableKind::V | TableKind::DN(_) => 0,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableKind::G => "g",
            TableKind::H => "h",
            TableKind::C => "c",
            TableKind::D => "d",
            TableKind::U => "u",
            TableKind::V => "v",
            TableKind::X => "x",
            TableKind::Y => "y",
            TableKind::DN(_) => "dN",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableKind::DN(n) => write!(f, "d{n}"),
            k => f.write_str(k.name()),
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    /// Parses `g h c d u v x y`; `dN` needs the order supplied separately, see [`TableKind::DN`].
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "g" => TableKind::G,
            "h" => TableKind::H,
            "c" => TableKind::C,
            "d" => TableKind::D,
            "u" => TableKind::U,
            "v" => TableKind::V,
            "x" => TableKind::X,
            "y" => TableKind::Y,
            "dN" | "dn" => TableKind::DN(0),
            other => {
                return Err(Error::UnsupportedParameter(format!(
                    "unknown table kind `{other}` (expected g|h|c|d|u|v|x|y|dN)"
                )))
            }
        })
    }
}

/// Sparse lower-triangular table of exact rationals; absent entries are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    pub kind: TableKind,
    pub max_row: u32,
    entries: BTreeMap<(u32, u32), Rational>,
}

impl CoeffTable {
    pub(crate) fn new(kind: TableKind, max_row: u32) -> Self {
        CoeffTable {
            kind,
            max_row,
            entries: BTreeMap::new(),
        }
    }

    pub(crate) fn set(&mut self, row: u32, col: u32, v: Rational) {
        if v != 0 {
            self.entries.insert((row, col), v);
        } else {
            self.entries.remove(&(row, col));
        }
    }

    /// Entry at (row, col), zero when absent.
    pub fn get(&self, row: u32, col: u32) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, row: u32, col: u32) -> Option<&Rational> {
        self.entries.get(&(row, col))
    }

    /// Non-zero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Copy keeping only rows ≤ `max_row`.
    pub fn truncated(&self, max_row: u32) -> CoeffTable {
        let mut t = CoeffTable::new(self.kind, max_row.min(self.max_row));
        t.entries = self
            .entries
            .iter()
            .filter(|(&(r, _), _)| r <= max_row)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        t
    }

    /// True when no entry sits above the diagonal.
    pub fn is_lower_triangular(&self) -> bool {
        self.entries.keys().all(|&(r, c)| c <= r)
    }
}

static VERIFY: AtomicBool = AtomicBool::new(false);

/// Enables the dual-route cross checks in release builds.
pub fn set_verification(on: bool) {
    VERIFY.store(on, Ordering::Relaxed);
}

/// Cross checks always run in debug builds, and in release builds when enabled
/// through [`set_verification`] or `HYPINT_VERIFY=1`.
pub fn verification_enabled() -> bool {
    cfg!(debug_assertions)
        || VERIFY.load(Ordering::Relaxed)
        || std::env::var("HYPINT_VERIFY").map(|v| v == "1").unwrap_or(false)
}

fn cache() -> &'static Mutex<HashMap<TableKind, CoeffTable>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKind, CoeffTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(
    kind: TableKind,
    max_row: u32,
    build: impl FnOnce() -> Result<CoeffTable>,
) -> Result<CoeffTable> {
    if let Some(t) = cache().lock().unwrap().get(&kind) {
        if t.max_row >= max_row {
            return Ok(t.truncated(max_row));
        }
    }
    let t = build()?;
    let out = t.truncated(max_row);
    cache().lock().unwrap().insert(kind, t);
    Ok(out)
}

/// g_{k,N}: g_{1,N} = 1, g_{k,N} = Σ_{j=k-1}^{N-1} g_{k-1,j} / (2j-1)^2, for 1 ≤ k ≤ N ≤ n_max+1.
pub fn g_table(n_max: u32) -> Result<CoeffTable> {
    let rows = n_max + 1;
    cached(TableKind::G, rows, || Ok(nested_sum_table(TableKind::G, rows, |j| {
        let o = 2 * j as i64 - 1;
        Rational::from((1, (o * o) as u64))
    })))
}

/// h_{k,N}: h_{1,N} = 1, h_{k,N} = Σ_{j=k-1}^{N-1} h_{k-1,j} / j^2, for 1 ≤ k ≤ N ≤ n_max.
pub fn h_table(n_max: u32) -> Result<CoeffTable> {
    cached(TableKind::H, n_max, || Ok(nested_sum_table(TableKind::H, n_max, |j| {
        Rational::from((1, (j as u64) * (j as u64)))
    })))
}

fn nested_sum_table(kind: TableKind, rows: u32, weight: impl Fn(u32) -> Rational) -> CoeffTable {
    let mut t = CoeffTable::new(kind, rows);
    for n in 1..=rows {
        t.set(n, 1, Rational::from(1));
    }
    for k in 2..=rows {
        // running prefix sum over j of t[j][k-1] * weight(j)
        let mut acc = Rational::new();
        for n in k..=rows {
            let j = n - 1;
            if let Some(prev) = t.get_ref(j, k - 1) {
                acc += Rational::from(prev * &weight(j));
            }
            t.set(n, k, acc.clone());
        }
    }
    t
}

/// c_{N,k} from the binomial sum (1/4^k) Σ_{j=0}^{k} C(2k+1, k-j) (-1)^{j+1} (2j+1)^{2N+1}.
pub fn sech_deriv_explicit(n_max: u32) -> CoeffTable {
    let mut t = CoeffTable::new(TableKind::C, n_max);
    for n in 0..=n_max {
        for k in 0..=n {
            let mut s = Integer::new();
            for j in 0..=k {
                let term = binomial(2 * k + 1, k - j) * Integer::from(2 * j + 1).pow(2 * n + 1);
                if j % 2 == 0 {
                    s -= term;
                } else {
                    s += term;
                }
            }
            t.set(n, k, Rational::from(s) * pow2(-2 * k as i64));
        }
    }
    t
}

/// c_{N,k} from c_{N,0} = -1, c_{N+1,k} = (2k+1)^2 c_{N,k} - 2k(2k+1) c_{N,k-1}.
pub fn sech_deriv_recurrence(n_max: u32) -> CoeffTable {
    let mut t = CoeffTable::new(TableKind::C, n_max);
    t.set(0, 0, Rational::from(-1));
    for n in 0..n_max {
        t.set(n + 1, 0, Rational::from(-1));
        for k in 1..=n + 1 {
            let a = Rational::from((2 * k + 1) * (2 * k + 1)) * t.get(n, k);
            let b = Rational::from(2 * k * (2 * k + 1)) * t.get(n, k - 1);
            t.set(n + 1, k, a - b);
        }
    }
    t
}

/// Coefficients c_{N,k} of d^{2N}/dx^{2N} sech(x) = Σ_k c_{N,k} sech^{2k+1}(x).
///
/// Both constructions run when verification is enabled and must agree exactly.
pub fn sech_deriv_coeffs(n_max: u32) -> Result<CoeffTable> {
    cached(TableKind::C, n_max, || {
        let explicit = sech_deriv_explicit(n_max);
        if verification_enabled() {
            let rec = sech_deriv_recurrence(n_max);
            compare(&explicit, &rec, "c: binomial sum vs recurrence")?;
        }
        Ok(explicit)
    })
}

/// d_{N,k} from the sum (2/4^k) Σ_{j=1}^{k} C(2k, k-j) (-1)^j (2j)^{2N}.
pub fn tanh_deriv_explicit(n_max: u32) -> CoeffTable {
    let mut t = CoeffTable::new(TableKind::D, n_max);
    for n in 1..=n_max {
        for k in 1..=n {
            let mut s = Integer::new();
            for j in 1..=k {
                let term = binomial(2 * k, k - j) * Integer::from(2 * j).pow(2 * n);
                if j % 2 == 1 {
                    s -= term;
                } else {
                    s += term;
                }
            }
            t.set(n, k, Rational::from(s) * pow2(1 - 2 * k as i64));
        }
    }
    t
}

/// d_{N,k} from d_{N,1} = -2^{2N-1}, d_{N+1,k} = 4k^2 d_{N,k} - (2k-1)(2k) d_{N,k-1}.
pub fn tanh_deriv_recurrence(n_max: u32) -> CoeffTable {
    let mut t = CoeffTable::new(TableKind::D, n_max);
    if n_max == 0 {
        return t;
    }
    t.set(1, 1, Rational::from(-2));
    for n in 1..n_max {
        t.set(n + 1, 1, -pow2(2 * (n as i64 + 1) - 1));
        for k in 2..=n + 1 {
            let a = Rational::from(4 * k * k) * t.get(n, k);
            let b = Rational::from((2 * k - 1) * 2 * k) * t.get(n, k - 1);
            t.set(n + 1, k, a - b);
        }
    }
    t
}

/// Coefficients d_{N,k} of d^{2N}/dx^{2N} tanh(x)/x written against sech^{2k}.
pub fn tanh_deriv_coeffs(n_max: u32) -> Result<CoeffTable> {
    cached(TableKind::D, n_max, || {
        let explicit = tanh_deriv_explicit(n_max);
        if verification_enabled() {
            let rec = tanh_deriv_recurrence(n_max);
            compare(&explicit, &rec, "d: binomial sum vs recurrence")?;
        }
        Ok(explicit)
    })
}

fn compare(a: &CoeffTable, b: &CoeffTable, what: &str) -> Result<()> {
    if a.entries != b.entries {
        let bad = a
            .entries
            .keys()
            .chain(b.entries.keys())
            .find(|k| a.get(k.0, k.1) != b.get(k.0, k.1))
            .copied()
            .unwrap_or((0, 0));
        return Err(Error::Consistency(format!(
            "{what}: first mismatch at ({}, {}): {} vs {}",
            bad.0,
            bad.1,
            a.get(bad.0, bad.1),
            b.get(bad.0, bad.1)
        )));
    }
    Ok(())
}

/// Inverse of a lower-triangular table with non-zero diagonal, by forward substitution.
pub fn invert_lower(a: &CoeffTable, kind: TableKind) -> Result<CoeffTable> {
    let base = a.kind.base_index();
    let mut b = CoeffTable::new(kind, a.max_row);
    for i in base..=a.max_row {
        let aii = a.get(i, i);
        if aii == 0 {
            return Err(Error::Consistency(format!("zero diagonal at {i}")));
        }
        b.set(i, i, Rational::from(aii.recip_ref()));
        for j in (base..i).rev() {
            let mut s = Rational::new();
            for k in j..i {
                if let (Some(x), Some(y)) = (a.get_ref(i, k), b.get_ref(k, j)) {
                    s += Rational::from(x * y);
                }
            }
            b.set(i, j, -s / &aii);
        }
    }
    Ok(b)
}

/// Matrix product of two lower-triangular tables sharing an index base.
pub fn multiply_lower(a: &CoeffTable, b: &CoeffTable) -> CoeffTable {
    let base = a.kind.base_index();
    let n = a.max_row.min(b.max_row);
    let mut p = CoeffTable::new(a.kind, n);
    for i in base..=n {
        for j in base..=i {
            let mut s = Rational::new();
            for k in j..=i {
                if let (Some(x), Some(y)) = (a.get_ref(i, k), b.get_ref(k, j)) {
                    s += Rational::from(x * y);
                }
            }
            p.set(i, j, s);
        }
    }
    p
}

/// True when the table is exactly the identity on its index range.
pub fn is_identity(t: &CoeffTable) -> bool {
    let base = t.kind.base_index();
    (base..=t.max_row).all(|i| t.get(i, i) == 1) && t.entries().all(|(r, c, _)| r == c)
}

/// The four normalized matrices u, v = u^{-1}, x, y = x^{-1}.
#[derive(Clone, Debug)]
pub struct NormalizedMatrices {
    pub u: CoeffTable,
    pub v: CoeffTable,
    pub x: CoeffTable,
    pub y: CoeffTable,
}

fn u_matrix(n_max: u32) -> Result<CoeffTable> {
    let c = sech_deriv_coeffs(n_max)?;
    let mut u = CoeffTable::new(TableKind::U, n_max);
    for (n, k, val) in c.entries() {
        let mut e = Rational::from(val / Rational::from(factorial(2 * n + 1)));
        if n % 2 == 0 {
            e = -e;
        }
        u.set(n, k, e);
    }
    Ok(u)
}

fn x_matrix(n_max: u32) -> Result<CoeffTable> {
    let d = tanh_deriv_coeffs(n_max)?;
    let mut x = CoeffTable::new(TableKind::X, n_max);
    for (n, k, val) in d.entries() {
        let mut e = Rational::from(val / Rational::from(factorial(2 * n)));
        if n % 2 == 1 {
            e = -e;
        }
        x.set(n, k, e);
    }
    Ok(x)
}

/// v_{N,k} = (2k+1)! C(2N,N) / ((2N+1) 2^{2N}) g_{k+1,N+1}.
pub fn v_closed_form(n_max: u32) -> Result<CoeffTable> {
    let g = g_table(n_max)?;
    let mut v = CoeffTable::new(TableKind::V, n_max);
    for n in 0..=n_max {
        let pre = Rational::from(central_binomial(n)) / Rational::from(2 * n + 1) * pow2(-2 * n as i64);
        for k in 0..=n {
            let e = Rational::from(factorial(2 * k + 1)) * &pre * g.get(n + 1, k + 1);
            v.set(n, k, e);
        }
    }
    Ok(v)
}

/// y_{N,k} = (2k)! 2^{2N-2k} / (N^2 C(2N,N)) h_{k,N}.
pub fn y_closed_form(n_max: u32) -> Result<CoeffTable> {
    let h = h_table(n_max)?;
    let mut y = CoeffTable::new(TableKind::Y, n_max);
    for n in 1..=n_max {
        let pre = Rational::from(1) / Rational::from(central_binomial(n) * (n * n));
        for k in 1..=n {
            let e = Rational::from(factorial(2 * k)) * pow2(2 * (n as i64 - k as i64)) * &pre * h.get(n, k);
            y.set(n, k, e);
        }
    }
    Ok(y)
}

/// u, v, x, y up to `n_max`; with verification on, v and y are also obtained by
/// exact triangular inversion and must coincide with the closed forms.
pub fn normalized_matrices(n_max: u32) -> Result<NormalizedMatrices> {
    let u = cached(TableKind::U, n_max, || u_matrix(n_max))?;
    let x = cached(TableKind::X, n_max, || x_matrix(n_max))?;
    let v = cached(TableKind::V, n_max, || {
        let v = v_closed_form(n_max)?;
        if verification_enabled() {
            compare(&v, &invert_lower(&u, TableKind::V)?, "v: closed form vs inverse of u")?;
        }
        Ok(v)
    })?;
    let y = cached(TableKind::Y, n_max, || {
        let y = y_closed_form(n_max)?;
        if verification_enabled() {
            compare(&y, &invert_lower(&x, TableKind::Y)?, "y: closed form vs inverse of x")?;
        }
        Ok(y)
    })?;
    Ok(NormalizedMatrices { u, v, x, y })
}

/// d_n(p, 2k) for 0 ≤ p ≤ n-1: d_n(0,0) = 1,
/// d_n(p,2k) = -2k d_n(p-1,2k) + (n-p-1+2k) d_n(p-1,2k-2). Stored at (p, k).
pub fn dn_table(n: u32) -> Result<CoeffTable> {
    if n < 2 {
        return Err(Error::UnsupportedParameter(format!("d_N table needs N >= 2, got {n}")));
    }
    cached(TableKind::DN(n), n - 1, || {
        let mut t = CoeffTable::new(TableKind::DN(n), n - 1);
        t.set(0, 0, Rational::from(1));
        for p in 1..n {
            for k in 1..=p {
                let a = Rational::from(-2 * k as i64) * t.get(p - 1, k);
                let b = Rational::from(n as i64 - p as i64 - 1 + 2 * k as i64) * t.get(p - 1, k - 1);
                t.set(p, k, a + b);
            }
        }
        Ok(t)
    })
}

/// Reduction coefficients c_{N,L}(p, 2k) with
/// ∫ (tanh x/x)^N sech^L = Σ_k c_{N,L}(p,2k) ∫ (tanh x/x)^{N-p} sech^{L+2k}.
/// Returns rows p = 0..=p_max (p_max < N), each holding k = 0..=p.
pub fn reduction_coeffs(n: u32, l: &Rational, p_max: u32) -> Result<Vec<Vec<Rational>>> {
    if p_max >= n {
        return Err(Error::UnsupportedParameter(format!("reduction depth {p_max} must be below N = {n}")));
    }
    let mut rows = vec![vec![Rational::from(1)]];
    for p in 1..=p_max {
        let prev = &rows[p as usize - 1];
        let denom = Rational::from(n - p);
        let mut row = Vec::with_capacity(p as usize + 1);
        for k in 0..=p {
            let mut e = Rational::new();
            if k < p {
                e -= Rational::from(l + 2 * k) * &prev[k as usize];
            }
            if k > 0 {
                let f = Rational::from(l + (n as i64 - p as i64 - 1 + 2 * k as i64));
                e += f * &prev[k as usize - 1];
            }
            row.push(e / &denom);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Builds any table kind up to `n`; `DN` uses `n` as the order.
pub fn table(kind: TableKind, n: u32) -> Result<CoeffTable> {
    match kind {
        TableKind::G => g_table(n),
        TableKind::H => h_table(n),
        TableKind::C => sech_deriv_coeffs(n),
        TableKind::D => tanh_deriv_coeffs(n),
        TableKind::U => Ok(normalized_matrices(n)?.u),
        TableKind::V => Ok(normalized_matrices(n)?.v),
        TableKind::X => Ok(normalized_matrices(n)?.x),
        TableKind::Y => Ok(normalized_matrices(n)?.y),
        TableKind::DN(_) => dn_table(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn known_entries() {
        assert_eq!(g_table(3).unwrap().get(3, 2), r(10, 9));
        assert_eq!(h_table(3).unwrap().get(3, 2), r(5, 4));
        assert_eq!(sech_deriv_coeffs(3).unwrap().get(2, 1), r(60, 1));
        let d = tanh_deriv_coeffs(3).unwrap();
        assert_eq!(d.get(1, 1), r(-2, 1));
        assert_eq!(d.get(2, 2), r(24, 1));
        assert_eq!(normalized_matrices(3).unwrap().y.get(2, 1), r(1, 3));
        assert_eq!(dn_table(2).unwrap().get(1, 1), r(2, 1));
    }

    #[test]
    fn diagonals() {
        let c = sech_deriv_coeffs(12).unwrap();
        let d = tanh_deriv_coeffs(12).unwrap();
        for n in 0..=12u32 {
            let f = Rational::from(factorial(2 * n + 1));
            let expect = if n % 2 == 0 { -f } else { f };
            assert_eq!(c.get(n, n), expect, "c diag {n}");
        }
        for n in 1..=12u32 {
            let f = Rational::from(factorial(2 * n));
            let expect = if n % 2 == 0 { f } else { -f };
            assert_eq!(d.get(n, n), expect, "d diag {n}");
        }
        let m = normalized_matrices(12).unwrap();
        for n in 0..=12 {
            assert_eq!(m.u.get(n, n), 1);
        }
        for n in 1..=12 {
            assert_eq!(m.x.get(n, n), 1);
        }
    }

    #[test]
    fn dual_routes_agree_to_twenty() {
        assert_eq!(sech_deriv_explicit(20), sech_deriv_recurrence(20));
        assert_eq!(tanh_deriv_explicit(20), tanh_deriv_recurrence(20));
        let m = normalized_matrices(20).unwrap();
        assert!(is_identity(&multiply_lower(&m.u, &m.v)));
        assert!(is_identity(&multiply_lower(&m.x, &m.y)));
        assert_eq!(invert_lower(&m.u, TableKind::V).unwrap(), m.v);
        assert_eq!(invert_lower(&m.x, TableKind::Y).unwrap(), m.y);
        for t in [&m.u, &m.v, &m.x, &m.y] {
            assert!(t.is_lower_triangular());
        }
    }

    #[test]
    fn reduction_matches_dn() {
        // c_{N,0}(N-1, 2k) = d_N(N-1, 2k) / (N-1)!
        for n in 2..=8u32 {
            let rows = reduction_coeffs(n, &Rational::new(), n - 1).unwrap();
            let dn = dn_table(n).unwrap();
            let f = Rational::from(factorial(n - 1));
            for k in 0..n {
                assert_eq!(rows[n as usize - 1][k as usize], dn.get(n - 1, k) / &f);
            }
        }
        let rows = reduction_coeffs(3, &r(1, 2), 1).unwrap();
        assert_eq!(rows[1], vec![r(-1, 4), r(7, 4)]);
    }

    #[test]
    fn lazily_extended_cache_is_consistent() {
        let small = g_table(4).unwrap();
        let big = g_table(9).unwrap();
        assert_eq!(big.truncated(5), small);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("v".parse::<TableKind>().unwrap(), TableKind::V);
        assert!("q".parse::<TableKind>().is_err());
    }
}
