//! Scalar functions and closed-form values used by the extremal analysis.
//!
//! Every radical is formed from an exact integer ratio before taking the
//! square root, so closed forms and direct graph computations round alike.

use crate::error::{Error, Result};
use crate::families::FamilySpec;

pub(crate) fn root(num: usize, den: usize) -> f64 {
    (num as f64 / den as f64).sqrt()
}

/// `f(x, y) = sqrt((x + y - 2) / (x y))` for `x, y >= 1`.
pub fn f(x: f64, y: f64) -> Result<f64> {
    if x.is_nan() || y.is_nan() || x < 1.0 || y < 1.0 {
        return Err(Error::Domain(format!("f({x}, {y}) needs x, y >= 1")));
    }
    Ok(((x + y - 2.0) / (x * y)).sqrt())
}

/// `g_a(x) = f(x, a) - f(x, a - 1)`.
pub fn g(a: u32, x: f64) -> Result<f64> {
    if a < 2 {
        return Err(Error::Domain(format!("g needs a >= 2, got {a}")));
    }
    Ok(f(x, a as f64)? - f(x, (a - 1) as f64)?)
}

/// The rationalised form of `g_a(x)` with numerator `2 - x`.
pub fn g_fraction(a: u32, x: f64) -> Result<f64> {
    if a < 2 || x.is_nan() || x < 1.0 {
        return Err(Error::Domain(format!("g_fraction({a}, {x})")));
    }
    let a = a as f64;
    let denom = (a * (a - 1.0) * x).sqrt() * (((a - 1.0) * (x + a - 2.0)).sqrt() + (a * (x + a - 3.0)).sqrt());
    Ok((2.0 - x) / denom)
}

/// Three-term contribution of a triangle carrying `x` pendants on one
/// non-hub vertex, inside a graph of order `n`.
fn triangle_bracket(n: usize, x: usize) -> f64 {
    root(x, x + 1) + root(n - 3 - x, n - 2 - x) + root(n - 3, (x + 1) * (n - 2 - x))
}

/// `f(n, x) = sqrt(x/(x+1)) + sqrt((n-3-x)/(n-2-x)) + sqrt((n-3)/((x+1)(n-2-x)))`.
///
/// Defined for `n >= 7` and `1 <= x <= n - 4`, the range on which the
/// reflection `f(n, x) = f(n, n - 3 - x)` stays inside the domain. The
/// maximisation itself only scans `1 <= x <= n - 6`.
pub fn lemma31_f(n: usize, x: usize) -> Result<f64> {
    if n < 7 || x < 1 || x + 4 > n {
        return Err(Error::Domain(format!("lemma31_f(n={n}, x={x}) needs n >= 7, 1 <= x <= n-4")));
    }
    Ok(triangle_bracket(n, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma31Case {
    N7,
    N8,
    N9,
    N10To15,
    N16Plus,
}

impl Lemma31Case {
    pub fn of(n: usize) -> Option<Self> {
        match n {
            0..=6 => None,
            7 => Some(Self::N7),
            8 => Some(Self::N8),
            9 => Some(Self::N9),
            10..=15 => Some(Self::N10To15),
            _ => Some(Self::N16Plus),
        }
    }

    /// The maximiser named by the case split.
    pub fn expected_argmax(self) -> usize {
        match self {
            Self::N7 | Self::N16Plus => 1,
            Self::N8 | Self::N10To15 => 2,
            Self::N9 => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma31Result {
    pub n: usize,
    pub argmax_x: usize,
    pub max_value: f64,
    pub case: Lemma31Case,
}

impl Lemma31Result {
    pub fn matches_case_split(&self) -> bool {
        self.argmax_x == self.case.expected_argmax()
    }
}

/// Exhaustive scan of `x` in `1..=n-6`; ties (within 1e-12) go to the smaller `x`.
pub fn lemma31_argmax(n: usize) -> Result<Lemma31Result> {
    let case = Lemma31Case::of(n).ok_or_else(|| Error::Domain(format!("lemma31_argmax needs n >= 7, got {n}")))?;
    let mut best = (1, triangle_bracket(n, 1));
    for x in 2..=n - 6 {
        let v = triangle_bracket(n, x);
        if v > best.1 + 1e-12 {
            best = (x, v);
        }
    }
    Ok(Lemma31Result { n, argmax_x: best.0, max_value: best.1, case })
}

/// `(n-5) sqrt((n-2)/(n-1)) + 6 sqrt(1/2)`.
pub fn lemma33_bound(n: usize) -> Result<f64> {
    if n < 7 {
        return Err(Error::Domain(format!("lemma33_bound needs n >= 7, got {n}")));
    }
    Ok((n - 5) as f64 * root(n - 2, n - 1) + 6.0 * root(1, 2))
}

/// `sqrt(2/3) + sqrt((n-5)/(n-4)) + sqrt((n-3)/(3(n-4))) - sqrt(2) - sqrt((n-2)/(n-1))`.
pub fn lemma33_g(n: usize) -> Result<f64> {
    if !(10..=15).contains(&n) {
        return Err(Error::Domain(format!("lemma33_g needs 10 <= n <= 15, got {n}")));
    }
    Ok(root(2, 3) + root(n - 5, n - 4) + root(n - 3, 3 * (n - 4)) - root(2, 1) - root(n - 2, n - 1))
}

/// Closed form for `S_n^{3,3}(m1, n1, m0)` with `m1, n1 >= 1` and
/// `m0 = n - m1 - n1 - 5` pendants on the hub.
pub fn s33_closed_form(n: usize, m1: usize, n1: usize) -> Result<f64> {
    if m1 < 1 || n1 < 1 || m1 + n1 + 5 > n {
        return Err(Error::InvalidParameters(format!(
            "S_{n}^{{3,3}}({m1},{n1},m0) needs m1, n1 >= 1 and m1 + n1 <= n - 5"
        )));
    }
    Ok(triangle_bracket(n, m1) + triangle_bracket(n, n1) + (n - 5) as f64 * root(n - 2, n - 1))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub n: usize,
    pub value: f64,
    pub family: Option<FamilySpec>,
}

/// Maximum index over graphs whose two cycles share exactly one vertex,
/// together with the graph attaining it.
pub fn lemma35_extremal(n: usize) -> Result<BoundValue> {
    let s33 = |m1: usize, n1: usize| FamilySpec::s33(m1, n1, n - m1 - n1 - 5);
    let tail = || (n - 5) as f64 * root(n - 2, n - 1);
    let (value, family) = match n {
        0..=5 => return Err(Error::Domain(format!("lemma35_extremal needs n >= 6, got {n}"))),
        6 => (root(3, 1) + root(2, 1) + root(2, 3) + root(4, 5), FamilySpec::s33(1, 0, 0)),
        7 => (root(3, 1) + 2.0 * root(2, 1) + 2.0 * root(5, 6), s33(1, 1)),
        8 => (root(2, 1) + root(2, 3) + root(3, 4) + root(4, 5) + root(5, 12) + 3.0 * root(6, 7), s33(2, 1)),
        9 => (2.0 * root(2, 3) + 2.0 * root(6, 15) + 2.0 * root(4, 5) + 4.0 * root(7, 8), s33(2, 2)),
        10..=15 => (2.0 * (root(2, 3) + root(n - 5, n - 4) + root(n - 3, 3 * (n - 4))) + tail(), s33(2, 2)),
        _ => (2.0 * (root(2, 1) + root(n - 4, n - 3)) + tail(), s33(1, 1)),
    };
    Ok(BoundValue { n, value, family: Some(family) })
}

/// The global maximum over connected bicyclic graphs of order `n`, attained by `B_n(n-3,1,1,1)`.
pub fn theorem_bound(n: usize) -> Result<BoundValue> {
    if n < 4 {
        return Err(Error::Domain(format!("theorem_bound needs n >= 4, got {n}")));
    }
    let value = 2.0 * root(n - 3, n - 2) + root(2, 1) + root(n - 4, n - 3) + (n - 4) as f64 * root(n - 2, n - 1);
    Ok(BoundValue { n, value, family: Some(FamilySpec::BQuad([n - 3, 1, 1, 1])) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn f_examples() {
        for x in [1.0, 2.0, 5.0, 100.0] {
            assert!(close(f(x, 2.0).unwrap(), 0.5f64.sqrt(), 1e-15));
        }
        assert_eq!(f(1.0, 1.0).unwrap(), 0.0);
        assert!(close(f(3.0, 6.0).unwrap(), (7.0f64 / 18.0).sqrt(), 1e-15));
        assert!(close(f(3.0, 6.0).unwrap(), 0.6236, 5e-5));
        assert!(f(0.5, 2.0).is_err());
        assert!(f(2.0, f64::NAN).is_err());
    }

    #[test]
    fn g_examples() {
        for a in [2, 3, 10] {
            assert!(g(a, 2.0).unwrap().abs() < 1e-15);
        }
        assert!(close(g(2, 1.0).unwrap(), 0.5f64.sqrt(), 1e-15));
        let direct = (5.0f64 / 12.0).sqrt() - 0.5f64.sqrt();
        assert!(close(g(3, 4.0).unwrap(), direct, 1e-15));
        assert!(close(g(3, 4.0).unwrap(), -0.0616, 5e-5));
        assert!(g(1, 3.0).is_err());
    }

    #[test]
    fn g_fraction_matches_difference() {
        for a in 2..30 {
            for x in 1..60 {
                let x = x as f64;
                assert!(close(g(a, x).unwrap(), g_fraction(a, x).unwrap(), 1e-12), "a={a} x={x}");
            }
        }
    }

    #[test]
    fn bracket_values() {
        let f82 = lemma31_f(8, 2).unwrap();
        assert!(close(f82, root(2, 3) + root(3, 4) + root(5, 12), 1e-12));
        assert!(close(f82, 2.3280, 5e-4));
        let f93 = lemma31_f(9, 3).unwrap();
        assert!(close(f93, root(3, 1) + root(3, 8), 1e-12));
        assert!(close(f93, 2.3444, 5e-4));
        assert!(close(lemma31_f(7, 1).unwrap(), root(3, 4) + root(2, 1), 1e-12));
        assert!(lemma31_f(7, 0).is_err());
        assert!(lemma31_f(7, 4).is_err());
        assert!(lemma31_f(6, 1).is_err());
    }

    #[test]
    fn bracket_reflection() {
        for n in 7..=60 {
            for x in 1..=n - 4 {
                let a = lemma31_f(n, x).unwrap();
                let b = lemma31_f(n, n - 3 - x).unwrap();
                assert!(close(a, b, 1e-12), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn argmax_examples() {
        assert_eq!(lemma31_argmax(9).unwrap().argmax_x, 3);
        assert_eq!(lemma31_argmax(12).unwrap().argmax_x, 2);
        assert_eq!(lemma31_argmax(100).unwrap().argmax_x, 1);
        let r = lemma31_argmax(8).unwrap();
        assert_eq!((r.argmax_x, r.case), (2, Lemma31Case::N8));
        assert!(close(r.max_value, lemma31_f(8, 2).unwrap(), 0.0));
        assert!(lemma31_argmax(6).is_err());
    }

    #[test]
    fn shared_vertex_bound_values() {
        let b7 = lemma33_bound(7).unwrap();
        assert!(close(b7, 2.0 * root(5, 6) + 6.0 * root(1, 2), 1e-12));
        // 2*sqrt(5/6) + 3*sqrt(2) = 1.82574186 + 4.24264069
        assert!(close(b7, 6.0684, 5e-4));
        let b10 = lemma33_bound(10).unwrap();
        assert!(close(b10, 5.0 * root(8, 9) + 6.0 * root(1, 2), 1e-12));
        assert!(close(b10, 8.9567, 5e-4));
        let mut prev = lemma33_bound(7).unwrap();
        for n in 8..=1000 {
            let cur = lemma33_bound(n).unwrap();
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn bracket_gap_values() {
        let expected = [-0.0040, -0.0034, -0.0034, -0.0038, -0.0043, -0.0049];
        for (n, want) in (10..=15).zip(expected) {
            let v = lemma33_g(n).unwrap();
            assert!(v < 0.0);
            assert!(close(v, want, 5e-4), "g({n}) = {v}");
        }
        assert!(lemma33_g(9).is_err());
        assert!(lemma33_g(16).is_err());
    }

    #[test]
    fn s33_examples() {
        let v = s33_closed_form(7, 1, 1).unwrap();
        assert!(close(v, root(3, 1) + 2.0 * root(2, 1) + 2.0 * root(5, 6), 1e-12));
        assert!(close(v, 6.3862, 5e-4));
        let v = s33_closed_form(9, 2, 2).unwrap();
        let expected = 2.0 * root(2, 3) + 2.0 * root(6, 15) + 2.0 * root(4, 5) + 4.0 * root(7, 8);
        assert!(close(v, expected, 1e-12));
        assert!(close(v, 8.4284, 5e-4));
        assert!(close(s33_closed_form(8, 2, 1).unwrap(), 7.4141, 5e-4));
        assert!(s33_closed_form(7, 0, 1).is_err());
        assert!(s33_closed_form(7, 2, 1).is_err());
    }

    #[test]
    fn shared_vertex_max_examples() {
        let b = lemma35_extremal(6).unwrap();
        assert!(close(b.value, 4.8572, 5e-4));
        assert_eq!(b.family, Some(FamilySpec::s33(1, 0, 0)));
        let b = lemma35_extremal(16).unwrap();
        assert!(close(b.value, 2.0 * (root(2, 1) + root(12, 13)) + 11.0 * root(14, 15), 1e-12));
        assert_eq!(b.family, Some(FamilySpec::s33(1, 1, 9)));
        let b = lemma35_extremal(12).unwrap();
        let want = 2.0 * (root(2, 3) + root(7, 8) + root(9, 24)) + 7.0 * root(10, 11);
        assert!(close(b.value, want, 1e-12));
        assert_eq!(b.family, Some(FamilySpec::s33(2, 2, 3)));
        assert!(lemma35_extremal(5).is_err());
    }

    #[test]
    fn shared_vertex_max_matches_s33_closed_form() {
        for n in 7..=40 {
            let b = lemma35_extremal(n).unwrap();
            let (m1, n1) = match b.family {
                Some(FamilySpec::SRt { ref m, ref nn, .. }) => (m[0], nn[0]),
                _ => unreachable!(),
            };
            assert!(close(b.value, s33_closed_form(n, m1, n1).unwrap(), 1e-9), "n={n}");
        }
    }

    #[test]
    fn theorem_bound_examples() {
        assert!(close(theorem_bound(7).unwrap().value, 6.8077, 5e-4));
        assert!(close(theorem_bound(8).unwrap().value, 7.8377, 5e-4));
        assert!(close(theorem_bound(9).unwrap().value, 8.8558, 5e-4));
        assert!(close(theorem_bound(4).unwrap().value, 2.0 * root(2, 1), 1e-12));
        assert_eq!(theorem_bound(7).unwrap().family, Some(FamilySpec::BQuad([4, 1, 1, 1])));
        assert!(theorem_bound(3).is_err());
    }
}
