//! Binary trees indexed by node addresses `i1 ... in`.
//!
//! The Kepler tree carries fractions; the matrix trees carry products
//! `K_{in} ... K_{i1}` and `M_{in} ... M_{i1}`; the morphism trees carry
//! `phi_{in} ∘ ... ∘ phi_{i1}` (generators `phi0, phi1`) and the same
//! products over `psi3, psi8`; the Sturm tree carries the slope of the
//! characteristic word fixed at each node of the `phi` tree.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::QuadraticNumber;
use crate::matrix::Matrix2;
use crate::morphisms::{BinaryMorphism, Generator, GeneratorSet, GeneratorWord};
use crate::scalar::Scalar;
use crate::solver::fixed_point_solve;

pub const DEFAULT_DEPTH_CAP: usize = 16;
pub const DEPTH_CAP_ENV: &str = "STURMKIT_DEPTH_CAP";

/// The depth cap, read from `STURMKIT_DEPTH_CAP` when set.
pub fn depth_cap() -> Result<usize> {
    match std::env::var(DEPTH_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{DEPTH_CAP_ENV}={v} is not a depth"))),
        Err(_) => Ok(DEFAULT_DEPTH_CAP),
    }
}

fn check_depth(n: usize) -> Result<()> {
    let cap = depth_cap()?;
    if n > cap {
        return Err(Error::Resource(format!("depth {n} exceeds the cap {cap}")));
    }
    Ok(())
}

/// A node, as the bits read from the root. The root is the empty address.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeAddress(Vec<u8>);

impl NodeAddress {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("address bit {b} is not 0 or 1")));
        }
        Ok(Self(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: u8) -> Self {
        debug_assert!(bit <= 1);
        let mut bits = self.0.clone();
        bits.push(bit);
        Self(bits)
    }

    pub fn parent(&self) -> Option<Self> {
        (!self.is_root()).then(|| Self(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Addresses on the left edge `0^n`, including the root.
    pub fn is_left_edge(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    /// The `k`-th address of level `n` in left-to-right order.
    pub fn at_level(n: usize, k: u64) -> Self {
        Self((0..n).map(|i| ((k >> (n - 1 - i)) & 1) as u8).collect())
    }

    /// Generator word of the node over `{g0, g1}`: the bits reversed, so
    /// that the product is `g_{in} ∘ ... ∘ g_{i1}`.
    pub fn generator_word(&self, g0: Generator, g1: Generator) -> Result<GeneratorWord> {
        let set = GeneratorSet(g0, g1);
        let indices = self
            .0
            .iter()
            .rev()
            .map(|&b| if b == 0 { g0 } else { g1 })
            .collect();
        GeneratorWord::new(set, indices)
    }

    /// Inverse of [`NodeAddress::generator_word`].
    pub fn from_generator_word(word: &GeneratorWord) -> Self {
        let g0 = word.set().0;
        Self(word.indices().iter().rev().map(|g| u8::from(*g != g0)).collect())
    }
}

/// Every address of level `n`, left to right, produced lazily.
pub fn level_addresses(n: usize) -> Result<impl Iterator<Item = NodeAddress>> {
    check_depth(n)?;
    Ok((0..1u64 << n).map(move |k| NodeAddress::at_level(n, k)))
}

/// All addresses of levels `0..=depth` in breadth-first order.
pub fn addresses_to_depth(depth: usize) -> Result<impl Iterator<Item = NodeAddress>> {
    check_depth(depth)?;
    Ok((0..=depth).flat_map(|n| (0..1u64 << n).map(move |k| NodeAddress::at_level(n, k))))
}

impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for NodeAddress {
    type Err = Error;

    /// Accepts a bit string; the root may be written as `""`, `L` or `Λ`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "L" || s == "Λ" {
            return Ok(Self::root());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("bad address character `{other}` in `{s}`"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }
}

/// A reduced fraction `p/q` with `0 < p < q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction<T> {
    pub p: T,
    pub q: T,
}

impl<T: Scalar> Fraction<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !p.is_positive() || p >= q {
            return Err(Error::Domain(format!("{p}/{q} is not in (0,1)")));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::Domain(format!("{p}/{q} is not reduced")));
        }
        Ok(Self { p, q })
    }
}

impl<T: Scalar> fmt::Display for Fraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl<T: Scalar> FromStr for Fraction<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected p/q, got `{s}`")))?;
        let num = |t: &str| {
            t.trim()
                .parse::<i64>()
                .ok()
                .and_then(T::from_i64)
                .ok_or_else(|| Error::Parse(format!("bad integer `{t}` in `{s}`")))
        };
        Self::new(num(p)?, num(q)?)
    }
}

/// `K_0` or `K_1`.
pub fn k_matrix<T: Scalar>(bit: u8) -> Matrix2<T> {
    if bit == 0 {
        Matrix2::from_i64(1, 0, 1, 1)
    } else {
        Matrix2::from_i64(0, 1, 1, 1)
    }
}

/// `M_i = J K_i J` with `J` the swap matrix.
pub fn m_matrix<T: Scalar>(bit: u8) -> Matrix2<T> {
    if bit == 0 {
        Matrix2::from_i64(1, 1, 0, 1)
    } else {
        Matrix2::from_i64(1, 1, 1, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFamily {
    K,
    M,
}

/// `X_{in} ... X_{i1}` for the chosen family.
pub fn matrix_at<T: Scalar>(addr: &NodeAddress, family: MatrixFamily) -> Matrix2<T> {
    addr.bits().iter().fold(Matrix2::identity(), |acc, &b| {
        let step = match family {
            MatrixFamily::K => k_matrix(b),
            MatrixFamily::M => m_matrix(b),
        };
        step * acc
    })
}

/// The Kepler fraction at `addr`: `K_{in} ... K_{i1} (1, 2)^T`.
pub fn kepler_value<T: Scalar>(addr: &NodeAddress) -> Fraction<T> {
    let (p, q) = matrix_at::<T>(addr, MatrixFamily::K).apply((T::one(), T::one() + T::one()));
    Fraction { p, q }
}

/// The `2^n` fractions of level `n` in address order.
pub fn kepler_level<T: Scalar>(n: usize) -> Result<Vec<Fraction<T>>> {
    Ok(level_addresses(n)?.map(|a| kepler_value(&a)).collect())
}

/// The unique address carrying `f`.
pub fn locate_fraction<T: Scalar>(f: &Fraction<T>) -> Result<NodeAddress> {
    let (mut a, mut b) = (f.p.clone(), f.q.clone());
    if !a.is_positive() || a >= b || !a.gcd(&b).is_one() {
        return Err(Error::Domain(format!(
            "{a}/{b} is not a reduced fraction in (0,1)"
        )));
    }
    let two = T::one() + T::one();
    let mut rev = Vec::new();
    while !(a.is_one() && b == two) {
        let twice = a.clone() + a.clone();
        if twice < b {
            rev.push(0);
            b = b - a.clone();
        } else {
            rev.push(1);
            let na = b - a.clone();
            b = a;
            a = na;
        }
    }
    rev.reverse();
    Ok(NodeAddress(rev))
}

/// `phi_{in} ∘ ... ∘ phi_{i1}`; the identity at the root.
pub fn morphism_at(addr: &NodeAddress) -> BinaryMorphism {
    addr.generator_word(Generator::Phi0, Generator::Phi1)
        .expect("phi generators")
        .to_morphism()
}

/// The same product over `psi3` (bit 0) and `psi8` (bit 1).
pub fn tree38_morphism_at(addr: &NodeAddress) -> BinaryMorphism {
    addr.generator_word(Generator::Psi(3), Generator::Psi(8))
        .expect("psi3, psi8 generators")
        .to_morphism()
}

/// The slope `alpha < 1/2` whose characteristic word is fixed by
/// [`morphism_at`]; `None` on the left edge, where the morphism fixes no
/// Sturmian word.
pub fn sturm_number_at<T: Scalar>(addr: &NodeAddress) -> Result<Option<QuadraticNumber<T>>> {
    if addr.is_left_edge() {
        return Ok(None);
    }
    let word = addr.generator_word(Generator::Phi0, Generator::Phi1)?;
    Ok(Some(fixed_point_solve::<T>(&word)?.alpha))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    Kepler,
    Phi,
    MatrixK,
    MatrixM,
    Sturm,
    M38,
}

impl TreeKind {
    pub const ALL: [TreeKind; 6] = [
        TreeKind::Kepler,
        TreeKind::Phi,
        TreeKind::MatrixK,
        TreeKind::MatrixM,
        TreeKind::Sturm,
        TreeKind::M38,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TreeKind::Kepler => "kepler",
            TreeKind::Phi => "phi",
            TreeKind::MatrixK => "matrixK",
            TreeKind::MatrixM => "matrixM",
            TreeKind::Sturm => "sturm",
            TreeKind::M38 => "m38",
        }
    }

    /// Node label text.
    pub fn label<T: Scalar>(self, addr: &NodeAddress) -> Result<String> {
        Ok(match self {
            TreeKind::Kepler => kepler_value::<T>(addr).to_string(),
            TreeKind::Phi => morphism_at(addr).to_string(),
            TreeKind::MatrixK => matrix_at::<T>(addr, MatrixFamily::K).to_string(),
            TreeKind::MatrixM => matrix_at::<T>(addr, MatrixFamily::M).to_string(),
            TreeKind::Sturm => match sturm_number_at::<T>(addr)? {
                Some(alpha) => alpha.to_string(),
                None => "none".to_owned(),
            },
            TreeKind::M38 => tree38_morphism_at(addr).to_string(),
        })
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TreeKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown tree kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Ascii,
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ascii" => Ok(ExportFormat::Ascii),
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

fn dot_id(addr: &NodeAddress) -> String {
    if addr.is_root() {
        "L".to_owned()
    } else {
        addr.to_string()
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Serializes the tree down to `depth`.
///
/// JSON maps each address (root `""`) to its label in breadth-first order;
/// DOT names nodes by address with the root as `L`; ASCII prints one
/// indented `address: label` line per node in depth-first order.
pub fn export_tree<T: Scalar>(kind: TreeKind, depth: usize, format: ExportFormat) -> Result<String> {
    let nodes: Vec<(NodeAddress, String)> = addresses_to_depth(depth)?
        .map(|a| kind.label::<T>(&a).map(|l| (a, l)))
        .collect::<Result<_>>()?;
    Ok(match format {
        ExportFormat::Json => {
            let map: Map<String, Value> = nodes
                .into_iter()
                .map(|(a, l)| (a.to_string(), Value::String(l)))
                .collect();
            Value::Object(map).to_string()
        }
        ExportFormat::Dot => {
            let mut out = format!("digraph {} {{\n", kind.name());
            for (a, l) in &nodes {
                out += &format!("  {} [label={}];\n", dot_quote(&dot_id(a)), dot_quote(l));
            }
            for (a, _) in &nodes {
                if let Some(p) = a.parent() {
                    out += &format!("  {} -> {};\n", dot_quote(&dot_id(&p)), dot_quote(&dot_id(a)));
                }
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::Ascii => {
            let mut sorted = nodes;
            sorted.sort_by(|(a, _), (b, _)| a.cmp(b));
            let mut out = String::new();
            for (a, l) in sorted {
                let name = if a.is_root() {
                    "L".to_owned()
                } else {
                    a.to_string()
                };
                out += &format!("{}{name}: {l}\n", "  ".repeat(a.level()));
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn addr(s: &str) -> NodeAddress {
        s.parse().unwrap()
    }

    fn frac(s: &str) -> Fraction<i64> {
        s.parse().unwrap()
    }

    #[test]
    fn kepler_figure() {
        assert_eq!(kepler_value::<i64>(&addr("")), frac("1/2"));
        assert_eq!(kepler_value::<i64>(&addr("11")), frac("3/5"));
        assert_eq!(kepler_value::<i64>(&addr("011")), frac("4/7"));
        let show = |n| -> Vec<String> {
            kepler_level::<i64>(n)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(show(0), ["1/2"]);
        assert_eq!(show(1), ["1/3", "2/3"]);
        assert_eq!(show(3), ["1/5", "4/5", "3/7", "4/7", "2/7", "5/7", "3/8", "5/8"]);
    }

    #[test]
    fn locate() {
        assert_eq!(locate_fraction(&frac("1/2")).unwrap(), NodeAddress::root());
        assert_eq!(locate_fraction(&frac("3/5")).unwrap(), addr("11"));
        assert_eq!(locate_fraction(&frac("4/7")).unwrap(), addr("011"));
        let bad = Fraction { p: 3i64, q: 2 };
        assert!(matches!(locate_fraction(&bad), Err(Error::Domain(_))));
        assert!("2/4".parse::<Fraction<i64>>().is_err());
        assert!("5/3".parse::<Fraction<i64>>().is_err());
    }

    #[test]
    fn morphism_figures() {
        assert_eq!(morphism_at(&addr("")), BinaryMorphism::identity());
        assert_eq!(morphism_at(&addr("1")).to_string(), "0->01,1->0");
        assert_eq!(morphism_at(&addr("01")).to_string(), "0->01,1->010");
        assert_eq!(morphism_at(&addr("00")).to_string(), "0->0,1->001");
        assert_eq!(tree38_morphism_at(&addr("0")).to_string(), "0->0,1->01");
        assert_eq!(tree38_morphism_at(&addr("1")).to_string(), "0->01,1->1");
        assert_eq!(tree38_morphism_at(&addr("01")).to_string(), "0->01,1->011");
        assert_eq!(tree38_morphism_at(&addr("11")).to_string(), "0->011,1->1");
    }

    #[test]
    fn matrix_figures() {
        assert_eq!(
            matrix_at::<i64>(&addr("11"), MatrixFamily::M),
            Matrix2::from_i64(2, 1, 1, 1)
        );
        assert_eq!(matrix_at::<i64>(&addr(""), MatrixFamily::K), Matrix2::identity());
        let k01 = matrix_at::<i64>(&addr("01"), MatrixFamily::K);
        assert_eq!(k01, Matrix2::from_i64(1, 1, 2, 1));
        assert_eq!(k01.apply((1, 2)), (3, 4));
        assert_eq!(kepler_value::<i64>(&addr("01")), frac("3/4"));
    }

    #[test]
    fn sturm_figure() {
        let s = |a: &str| {
            sturm_number_at::<BigInt>(&addr(a))
                .unwrap()
                .map(|x| x.to_string())
        };
        assert_eq!(s(""), None);
        assert_eq!(s("000"), None);
        assert_eq!(s("1").as_deref(), Some("(3-1*sqrt(5))/2"));
        assert_eq!(s("01").as_deref(), Some("(-1+1*sqrt(2))/1"));
        assert_eq!(s("011").as_deref(), Some("(-1+1*sqrt(3))/2"));
    }

    #[test]
    fn address_parsing() {
        assert_eq!(addr("L"), NodeAddress::root());
        assert_eq!(addr("Λ"), NodeAddress::root());
        assert_eq!(addr("0110").to_string(), "0110");
        assert!("012".parse::<NodeAddress>().is_err());
        let w = addr("011")
            .generator_word(Generator::Phi0, Generator::Phi1)
            .unwrap();
        assert_eq!(w.to_string(), "phi1,phi1,phi0");
        assert_eq!(NodeAddress::from_generator_word(&w), addr("011"));
    }

    #[test]
    fn exports() {
        assert_eq!(
            export_tree::<i64>(TreeKind::Kepler, 1, ExportFormat::Json).unwrap(),
            r#"{"":"1/2","0":"1/3","1":"2/3"}"#
        );
        assert_eq!(
            export_tree::<BigInt>(TreeKind::Sturm, 1, ExportFormat::Json).unwrap(),
            r#"{"":"none","0":"none","1":"(3-1*sqrt(5))/2"}"#
        );
        assert_eq!(
            export_tree::<i64>(TreeKind::Kepler, 0, ExportFormat::Dot).unwrap(),
            "digraph kepler {\n  \"L\" [label=\"1/2\"];\n}\n"
        );
        let ascii = export_tree::<i64>(TreeKind::Kepler, 2, ExportFormat::Ascii).unwrap();
        assert_eq!(ascii.lines().count(), 7);
        assert_eq!(ascii.lines().nth(1), Some("  0: 1/3"));
        let json = export_tree::<i64>(TreeKind::Kepler, 2, ExportFormat::Json).unwrap();
        assert!(
            json.starts_with(r#"{"":"1/2","0":"1/3","1":"2/3","00":"#),
            "{json}"
        );
    }
}
