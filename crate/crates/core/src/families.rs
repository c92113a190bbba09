//! Generators for the parametric unicyclic and bicyclic families.
//!
//! Vertex numbering is fixed so canonical-form tests are reproducible:
//!
//! * cycle with pendants: cycle `0..k` in order, pendants appended;
//! * `S_n^{r,t}`: hub `0`, the `C_r` path `1..r`, the `C_t` path `r..r+t-1`,
//!   pendants appended in the order `m_1..m_{r-1}`, `n_1..n_{t-1}`, `m_0`;
//! * `B_n(n_1..n_4)`: `Q_4` on `0..4` as the cycle `0-1-2-3` with chord `0-2`;
//! * shared path: the branch vertices are `0` and `1`, then the internal
//!   vertices of the shared path, of the rest of `C_r`, and of the rest of `C_t`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::root;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Cycle `C_k` with `pendants[i]` pendant vertices on its `i`-th vertex.
    CyclePendants { pendants: Vec<usize> },
    /// Cycles `C_r` and `C_t` sharing the hub vertex.
    SRt { r: usize, t: usize, m: Vec<usize>, nn: Vec<usize>, m0: usize },
    /// `Q_4` with `q[i] - 1` pendants on its `i`-th vertex.
    BQuad([usize; 4]),
    /// Cycles `C_r`, `C_t` sharing a path on `s` vertices, pendants on the base.
    SharedPath { r: usize, t: usize, s: usize, pendants: Vec<usize> },
}

impl FamilySpec {
    /// `S_n^{3,3}(m1, n1, m0) = S_n^{3,3}(m1, 0, n1, 0, m0)`.
    pub fn s33(m1: usize, n1: usize, m0: usize) -> Self {
        FamilySpec::SRt { r: 3, t: 3, m: vec![m1, 0], nn: vec![n1, 0], m0 }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::CyclePendants { pendants } => pendants.len() + pendants.iter().sum::<usize>(),
            FamilySpec::SRt { r, t, m, nn, m0 } => r + t - 1 + m.iter().sum::<usize>() + nn.iter().sum::<usize>() + m0,
            FamilySpec::BQuad(q) => q.iter().sum(),
            FamilySpec::SharedPath { r, t, s, pendants } => r + t - s + pendants.iter().sum::<usize>(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::CyclePendants { pendants } => make_cycle_pendants(pendants.len(), pendants),
            FamilySpec::SRt { r, t, m, nn, m0 } => make_s_rt(*r, *t, m, nn, *m0),
            FamilySpec::BQuad(q) => make_b_quad(*q),
            FamilySpec::SharedPath { r, t, s, pendants } => make_shared_path(*r, *t, *s, pendants),
        }
    }

    /// Text form accepted by [`FamilySpec::from_str`].
    pub fn to_text(&self) -> String {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::CyclePendants { pendants } => format!("C {} m={}", pendants.len(), list(pendants)),
            FamilySpec::SRt { r, t, m, nn, m0 } => {
                format!("S {r} {t} m={} n={} m0={m0}", list(m), list(nn))
            }
            FamilySpec::BQuad(q) => format!("B {} {} {} {}", q[0], q[1], q[2], q[3]),
            FamilySpec::SharedPath { r, t, s, pendants } => {
                format!("theta {r} {t} {s} p={}", list(pendants))
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let n = self.order();
        match self {
            FamilySpec::CyclePendants { pendants } => write!(f, "C_{}({})", pendants.len(), list(pendants)),
            FamilySpec::SRt { r: 3, t: 3, m, nn, m0 } if m[1] == 0 && nn[1] == 0 => {
                write!(f, "S_{n}^{{3,3}}({},{},{m0})", m[0], nn[0])
            }
            FamilySpec::SRt { r, t, m, nn, m0 } => {
                write!(f, "S_{n}^{{{r},{t}}}({},{},{m0})", list(m), list(nn))
            }
            FamilySpec::BQuad(q) => write!(f, "B_{n}({},{},{},{})", q[0], q[1], q[2], q[3]),
            FamilySpec::SharedPath { r, t, s, pendants } => {
                write!(f, "B_{n}^{{{r},{t}}}({s})[{}]", list(pendants))
            }
        }
    }
}

fn parse_num(tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line: 1, msg: format!("expected a non-negative integer, got {tok:?}") })
}

fn parse_list(val: &str) -> Result<Vec<usize>> {
    if val.is_empty() {
        return Ok(Vec::new());
    }
    val.split(',').map(parse_num).collect()
}

fn padded(mut v: Vec<usize>, len: usize, what: &str) -> Result<Vec<usize>> {
    if v.len() > len {
        return Err(Error::InvalidParameters(format!("{what} has {} entries, at most {len} allowed", v.len())));
    }
    v.resize(len, 0);
    Ok(v)
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar (whitespace separated, lists comma separated, missing list
    /// entries default to zero):
    ///
    /// ```text
    /// C <k> [m=<list>]
    /// S <r> <t> [m=<list>] [n=<list>] [m0=<k>]
    /// B <n1> <n2> <n3> <n4>
    /// theta <r> <t> <s> [p=<list>]
    /// ```
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let Some((&kind, rest)) = toks.split_first() else {
            return Err(Error::Parse { line: 1, msg: "empty family spec".into() });
        };
        let positional: Vec<&str> = rest.iter().copied().filter(|t| !t.contains('=')).collect();
        let mut keyed = std::collections::BTreeMap::new();
        for t in rest.iter().filter(|t| t.contains('=')) {
            let (k, v) = t.split_once('=').unwrap();
            if keyed.insert(k.to_ascii_lowercase(), v).is_some() {
                return Err(Error::Parse { line: 1, msg: format!("key {k:?} given twice") });
            }
        }
        let want = |count: usize| -> Result<Vec<usize>> {
            if positional.len() != count {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("{kind} expects {count} positional arguments, got {}", positional.len()),
                });
            }
            positional.iter().map(|t| parse_num(t)).collect()
        };
        let allow_keys = |allowed: &[&str]| -> Result<()> {
            match keyed.keys().find(|k| !allowed.contains(&k.as_str())) {
                Some(k) => Err(Error::Parse { line: 1, msg: format!("unknown key {k:?} for {kind}") }),
                None => Ok(()),
            }
        };
        let list_of = |key: &str| -> Result<Vec<usize>> { keyed.get(key).map_or(Ok(Vec::new()), |v| parse_list(v)) };

        let spec = match kind.to_ascii_lowercase().as_str() {
            "c" | "cycle" => {
                allow_keys(&["m"])?;
                let k = want(1)?[0];
                FamilySpec::CyclePendants { pendants: padded(list_of("m")?, k, "m")? }
            }
            "s" => {
                allow_keys(&["m", "n", "m0"])?;
                let p = want(2)?;
                let (r, t) = (p[0], p[1]);
                if r < 3 || t < 3 {
                    return Err(Error::InvalidParameters(format!("S needs r, t >= 3, got {r}, {t}")));
                }
                let m0 = keyed.get("m0").map_or(Ok(0), |v| parse_num(v))?;
                FamilySpec::SRt {
                    r,
                    t,
                    m: padded(list_of("m")?, r - 1, "m")?,
                    nn: padded(list_of("n")?, t - 1, "n")?,
                    m0,
                }
            }
            "b" => {
                allow_keys(&[])?;
                let q = want(4)?;
                FamilySpec::BQuad([q[0], q[1], q[2], q[3]])
            }
            "theta" => {
                allow_keys(&["p"])?;
                let p = want(3)?;
                let (r, t, s) = (p[0], p[1], p[2]);
                if r < t || t < s || s < 2 {
                    return Err(Error::InvalidParameters(format!("theta needs r >= t >= s >= 2, got {r} {t} {s}")));
                }
                FamilySpec::SharedPath { r, t, s, pendants: padded(list_of("p")?, r + t - s, "p")? }
            }
            other => return Err(Error::Parse { line: 1, msg: format!("unknown family {other:?}") }),
        };
        spec.build()?;
        Ok(spec)
    }
}

/// Appends `count` pendant vertices to `at`.
fn attach_pendants(edges: &mut Vec<(usize, usize)>, next: &mut usize, at: usize, count: usize) {
    for _ in 0..count {
        edges.push((at, *next));
        *next += 1;
    }
}

pub fn make_cycle_pendants(k: usize, m: &[usize]) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("cycle length {k} < 3")));
    }
    if m.len() != k {
        return Err(Error::InvalidParameters(format!("{} pendant counts for a {k}-cycle", m.len())));
    }
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (i, &c) in m.iter().enumerate() {
        attach_pendants(&mut edges, &mut next, i, c);
    }
    Graph::new(next, &edges)
}

pub fn make_s_rt(r: usize, t: usize, m: &[usize], nn: &[usize], m0: usize) -> Result<Graph> {
    if r < 3 || t < 3 {
        return Err(Error::InvalidParameters(format!("cycle lengths r={r}, t={t} must be >= 3")));
    }
    if m.len() != r - 1 || nn.len() != t - 1 {
        return Err(Error::InvalidParameters(format!(
            "S^{{{r},{t}}} needs {} and {} pendant counts, got {} and {}",
            r - 1,
            t - 1,
            m.len(),
            nn.len()
        )));
    }
    let mut edges = Vec::new();
    let c_r: Vec<usize> = std::iter::once(0).chain(1..r).collect();
    let c_t: Vec<usize> = std::iter::once(0).chain(r..r + t - 1).collect();
    for cyc in [&c_r, &c_t] {
        for i in 0..cyc.len() {
            edges.push((cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }
    let mut next = r + t - 1;
    for (i, &c) in m.iter().enumerate() {
        attach_pendants(&mut edges, &mut next, c_r[i + 1], c);
    }
    for (j, &c) in nn.iter().enumerate() {
        attach_pendants(&mut edges, &mut next, c_t[j + 1], c);
    }
    attach_pendants(&mut edges, &mut next, 0, m0);
    Graph::new(next, &edges)
}

pub fn make_b_quad(q: [usize; 4]) -> Result<Graph> {
    if let Some(i) = q.iter().position(|&x| x < 1) {
        return Err(Error::InvalidParameters(format!("B_n needs every n_i >= 1, n_{} = {}", i + 1, q[i])));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
    let mut next = 4;
    for (i, &c) in q.iter().enumerate() {
        attach_pendants(&mut edges, &mut next, i, c - 1);
    }
    Graph::new(next, &edges)
}

/// Two cycles `C_r`, `C_t` sharing a path with `s` vertices (a theta base with
/// arcs of `s-1`, `r-s+1` and `t-s+1` edges) plus pendants on base vertices.
/// An empty `pendants` slice means no pendants.
pub fn make_shared_path(r: usize, t: usize, s: usize, pendants: &[usize]) -> Result<Graph> {
    if t < 3 || r < t {
        return Err(Error::InvalidParameters(format!("need r >= t >= 3, got r={r}, t={t}")));
    }
    if s < 2 || s > t {
        return Err(Error::InvalidParameters(format!("need 2 <= s <= t, got s={s}, t={t}")));
    }
    if r == s {
        return Err(Error::InvalidParameters(format!(
            "r = t = s = {s} leaves two arcs of length one (parallel edges)"
        )));
    }
    let base = r + t - s;
    if !pendants.is_empty() && pendants.len() != base {
        return Err(Error::InvalidParameters(format!(
            "{} pendant counts for a base of {base} vertices",
            pendants.len()
        )));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for arc_len in [s - 1, r - s + 1, t - s + 1] {
        let mut prev = 0;
        for _ in 1..arc_len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    debug_assert_eq!(next, base);
    for (v, &c) in pendants.iter().enumerate() {
        attach_pendants(&mut edges, &mut next, v, c);
    }
    Graph::new(next, &edges)
}

/// Closed form of the index of `B_n(n1, n2, 1, 1)` with `n = n1 + n2 + 2`.
pub fn b_quad_closed_form(n1: usize, n2: usize) -> Result<f64> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::InvalidParameters(format!("B_n(n1,n2,1,1) needs n1, n2 >= 1, got {n1}, {n2}")));
    }
    let n = n1 + n2 + 2;
    Ok(root(n - 3, (n1 + 1) * n2)
        + root(n2, n2 + 1)
        + root(n1 - 1, n1)
        + root(n - 3, n - 2)
        + root(1, 2)
        + (n - 4) as f64 * root(n - 2, n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::abc_gg_value;
    use crate::scalar::theorem_bound;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn cycle_pendants_examples() {
        let tri = make_cycle_pendants(3, &[0, 0, 0]).unwrap();
        assert_eq!((tri.order(), tri.size()), (3, 3));
        let g = make_cycle_pendants(4, &[1, 0, 0, 0]).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        let g = make_cycle_pendants(3, &[2, 1, 0]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!([g.degree(0), g.degree(1), g.degree(2)], [4, 3, 2]);
        assert!(make_cycle_pendants(2, &[0, 0]).is_err());
    }

    #[test]
    fn s_rt_examples() {
        let g = make_s_rt(3, 3, &[1, 0], &[0, 0], 0).unwrap();
        assert!(close(abc_gg_value(&g).unwrap(), 4.8572, 5e-4));
        let g = make_s_rt(3, 4, &[0, 0], &[0, 0, 0], 0).unwrap();
        assert_eq!(g.order(), 6);
        let v = abc_gg_value(&g).unwrap();
        assert!(close(v, root(3, 1) + 2.0 * root(2, 1), 1e-12));
        assert!(close(v, 4.5605, 5e-4));
        let g = FamilySpec::s33(0, 0, 0).build().unwrap();
        assert!(close(abc_gg_value(&g).unwrap(), 4.0 * root(2, 3), 1e-12));
        let g = FamilySpec::s33(0, 0, 1).build().unwrap();
        assert!(close(abc_gg_value(&g).unwrap(), 4.3585, 5e-4));
        assert!(make_s_rt(3, 3, &[1], &[0, 0], 0).is_err());
        assert!(make_s_rt(2, 3, &[1], &[0, 0], 0).is_err());
    }

    #[test]
    fn b_quad_examples() {
        let g = make_b_quad([4, 1, 1, 1]).unwrap();
        assert_eq!(g.order(), 7);
        assert!(close(abc_gg_value(&g).unwrap(), 6.8077, 5e-4));
        let q4 = make_b_quad([1, 1, 1, 1]).unwrap();
        assert_eq!(q4, Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap());
        assert!(close(abc_gg_value(&q4).unwrap(), 2.0 * root(2, 1), 1e-12));
        let g = make_b_quad([6, 1, 1, 1]).unwrap();
        assert!(close(abc_gg_value(&g).unwrap(), 8.8558, 5e-4));
        let g = make_b_quad([2, 1, 1, 1]).unwrap();
        let expected = 2.0 * root(2, 3) + 3.0 * root(1, 2) + root(3, 4);
        assert!(close(abc_gg_value(&g).unwrap(), expected, 1e-12));
        let g = make_b_quad([3, 1, 1, 1]).unwrap();
        let expected = root(3, 1) + root(2, 1) + root(2, 3) + 2.0 * root(4, 5);
        assert!(close(abc_gg_value(&g).unwrap(), expected, 1e-12));
        assert!(make_b_quad([0, 1, 1, 1]).is_err());
    }

    #[test]
    fn shared_path_examples() {
        let g = make_shared_path(3, 3, 2, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        let degs: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![3, 3, 2, 2]);
        let g = make_shared_path(4, 3, 2, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        let g = make_shared_path(4, 4, 3, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert!(make_shared_path(3, 4, 2, &[]).is_err());
        assert!(make_shared_path(4, 3, 4, &[]).is_err());
        assert!(make_shared_path(3, 3, 3, &[]).is_err());
        assert!(make_shared_path(4, 4, 1, &[]).is_err());
        assert!(make_shared_path(4, 4, 3, &[1, 0]).is_err());
    }

    #[test]
    fn b_quad_closed_form_examples() {
        for n in 5..=12 {
            let v = b_quad_closed_form(n - 3, 1).unwrap();
            assert!(close(v, theorem_bound(n).unwrap().value, 1e-12), "n={n}");
        }
        assert!(close(b_quad_closed_form(1, 1).unwrap(), 2.0 * root(2, 1), 1e-12));
        let direct = abc_gg_value(&make_b_quad([2, 2, 1, 1]).unwrap()).unwrap();
        assert!(close(b_quad_closed_form(2, 2).unwrap(), direct, 1e-9));
        assert!(b_quad_closed_form(0, 2).is_err());
    }

    #[test]
    fn spec_text_round_trip() {
        let cases = [
            ("B 4 1 1 1", FamilySpec::BQuad([4, 1, 1, 1])),
            ("S 3 3 m=1 n=1 m0=0", FamilySpec::s33(1, 1, 0)),
            ("theta 4 4 3", FamilySpec::SharedPath { r: 4, t: 4, s: 3, pendants: vec![0; 5] }),
            ("C 3 m=2,1", FamilySpec::CyclePendants { pendants: vec![2, 1, 0] }),
        ];
        for (text, want) in cases {
            let got: FamilySpec = text.parse().unwrap();
            assert_eq!(got, want);
            assert_eq!(got.to_text().parse::<FamilySpec>().unwrap(), want);
        }
        assert_eq!(FamilySpec::s33(1, 1, 0).to_string(), "S_7^{3,3}(1,1,0)");
        assert_eq!(FamilySpec::BQuad([4, 1, 1, 1]).to_string(), "B_7(4,1,1,1)");
    }

    #[test]
    fn spec_text_errors() {
        for bad in ["", "B 0 1 1 1", "B 1 1 1", "Q 1 2", "S 3 3 m=1,2,3", "S 3 3 x=1", "theta 3 3 3", "B a 1 1 1"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad:?}");
        }
    }
}
