//! The three group families, their elements, and the definitional power
//! graph used as the oracle for every structural construction.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Cyclic group `Z_n` of order `n`.
    Cyclic,
    /// Dihedral group `D_n = <a, b | a^n = b^2 = e, ba = a^-1 b>` of order `2n`.
    Dihedral,
    /// Dicyclic group `Q_n = <a, b | a^2n = e, b^2 = a^n, ab = ba^-1>` of order `4n`.
    Dicyclic,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Cyclic => "zn",
            Family::Dihedral => "dn",
            Family::Dicyclic => "qn",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "zn" | "z" | "cyclic" => Ok(Family::Cyclic),
            "dn" | "d" | "dihedral" => Ok(Family::Dihedral),
            "qn" | "q" | "dicyclic" | "quaternion" => Ok(Family::Dicyclic),
            other => Err(Error::Parse(format!("unknown group family {other:?}"))),
        }
    }
}

/// Group element in normal form.
///
/// Dihedral reflections are written `b a^k`, dicyclic coset elements `a^k b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Residue(u64),
    Rotation(u64),
    Reflection(u64),
    APower(u64),
    BCoset(u64),
}

impl Element {
    pub fn is_identity(self) -> bool {
        matches!(self, Element::Residue(0) | Element::Rotation(0) | Element::APower(0))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Element::Residue(k) => write!(f, "{k}"),
            Element::Rotation(0) | Element::APower(0) => f.write_str("e"),
            Element::Rotation(k) | Element::APower(k) => write!(f, "a^{k}"),
            Element::Reflection(0) => f.write_str("b"),
            Element::Reflection(k) => write!(f, "ba^{k}"),
            Element::BCoset(0) => f.write_str("b"),
            Element::BCoset(k) => write!(f, "a^{k}b"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    n: u64,
}

impl GroupSpec {
    pub fn new(family: Family, n: u64) -> Result<Self> {
        let reason = match family {
            _ if n == 0 => Some("n must be at least 1"),
            Family::Dicyclic if n < 2 => Some("dicyclic groups need n >= 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidGroup { family, n, reason }),
            None => Ok(GroupSpec { family, n }),
        }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(Family::Cyclic, n)
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        Self::new(Family::Dihedral, n)
    }

    pub fn dicyclic(n: u64) -> Result<Self> {
        Self::new(Family::Dicyclic, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> usize {
        let n = self.n as usize;
        match self.family {
            Family::Cyclic => n,
            Family::Dihedral => 2 * n,
            Family::Dicyclic => 4 * n,
        }
    }

    pub fn identity(&self) -> Element {
        match self.family {
            Family::Cyclic => Element::Residue(0),
            Family::Dihedral => Element::Rotation(0),
            Family::Dicyclic => Element::APower(0),
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        let n = self.n;
        match (self.family, x) {
            (Family::Cyclic, Element::Residue(k)) => k < n,
            (Family::Dihedral, Element::Rotation(k) | Element::Reflection(k)) => k < n,
            (Family::Dicyclic, Element::APower(k) | Element::BCoset(k)) => k < 2 * n,
            _ => false,
        }
    }

    /// Position of `x` in [`enumerate`] order.
    pub fn index_of(&self, x: Element) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let n = self.n as usize;
        Some(match x {
            Element::Residue(k) | Element::Rotation(k) | Element::APower(k) => k as usize,
            Element::Reflection(k) => n + k as usize,
            Element::BCoset(k) => 2 * n + k as usize,
        })
    }

    /// Group product `x * y` in normal form.
    ///
    /// # Panics
    /// If either operand is not an element of this group.
    pub fn mul(&self, x: Element, y: Element) -> Element {
        assert!(
            self.contains(x) && self.contains(y),
            "{x} or {y} is not an element of {}{}",
            self.family,
            self.n
        );
        let n = self.n;
        match (x, y) {
            (Element::Residue(i), Element::Residue(j)) => Element::Residue((i + j) % n),

            (Element::Rotation(i), Element::Rotation(j)) => Element::Rotation((i + j) % n),
            // a^i b a^j = b a^(j - i)
            (Element::Rotation(i), Element::Reflection(j)) => Element::Reflection((j + n - i) % n),
            (Element::Reflection(i), Element::Rotation(j)) => Element::Reflection((i + j) % n),
            // b a^i b a^j = a^(j - i)
            (Element::Reflection(i), Element::Reflection(j)) => Element::Rotation((j + n - i) % n),

            (Element::APower(i), Element::APower(j)) => Element::APower((i + j) % (2 * n)),
            (Element::APower(i), Element::BCoset(j)) => Element::BCoset((i + j) % (2 * n)),
            // a^i b a^j = a^(i - j) b
            (Element::BCoset(i), Element::APower(j)) => Element::BCoset((i + 2 * n - j) % (2 * n)),
            // a^i b a^j b = a^(i - j) b^2 = a^(i - j + n)
            (Element::BCoset(i), Element::BCoset(j)) => Element::APower((i + 3 * n - j) % (2 * n)),
            _ => unreachable!("family checked above"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Cyclic => "Z",
            Family::Dihedral => "D",
            Family::Dicyclic => "Q",
        };
        write!(f, "{name}_{}", self.n)
    }
}

/// Accepts `zn:6`, `dn15`, `q2`, the `Z_6` display form and similar.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .find(|c: char| c.is_ascii_digit() || c == ':')
            .ok_or_else(|| Error::Parse(format!("missing size in group {s:?}")))?;
        let family: Family = s[..split].trim_end_matches('_').parse()?;
        let digits = s[split..].trim_start_matches(':');
        let n: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad group size {digits:?}")))?;
        GroupSpec::new(family, n)
    }
}

/// All elements in canonical order: residues ascending; rotations then
/// reflections by exponent; `a`-powers then the `b` coset by exponent.
pub fn enumerate(spec: &GroupSpec) -> Vec<Element> {
    let n = spec.n;
    match spec.family {
        Family::Cyclic => (0..n).map(Element::Residue).collect(),
        Family::Dihedral => (0..n)
            .map(Element::Rotation)
            .chain((0..n).map(Element::Reflection))
            .collect(),
        Family::Dicyclic => (0..2 * n)
            .map(Element::APower)
            .chain((0..2 * n).map(Element::BCoset))
            .collect(),
    }
}

/// `{x^m : m in Z}`.
pub fn cyclic_subgroup(spec: &GroupSpec, x: Element) -> BTreeSet<Element> {
    let e = spec.identity();
    let mut out = BTreeSet::from([e]);
    let mut power = x;
    while power != e {
        out.insert(power);
        power = spec.mul(power, x);
    }
    out
}

/// Simple graph on labeled vertices with dense adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<Element>,
    adj: Vec<bool>,
}

impl LabeledGraph {
    pub fn empty(labels: Vec<Element>) -> Self {
        let n = labels.len();
        LabeledGraph {
            labels,
            adj: vec![false; n * n],
        }
    }

    /// Vertices labeled `Residue(0..n)`.
    pub fn unlabeled(n: usize) -> Self {
        Self::empty((0..n as u64).map(Element::Residue).collect())
    }

    pub fn from_edges(labels: Vec<Element>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(labels);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Reads the `u v` per-line format written by [`LabeledGraph::to_edge_list`].
    /// Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(vertex_count: usize, text: &str) -> Result<Self> {
        let mut g = Self::unlabeled(vertex_count);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<usize> {
                parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: expected two vertices", lineno + 1)))?
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex index", lineno + 1)))
            };
            let (u, v) = (next()?, next()?);
            if parts.next().is_some() {
                return Err(Error::Parse(format!("line {}: trailing tokens", lineno + 1)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::Parse(format!("edge ({u}, {v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::Parse(format!("self-loop at {u}")));
        }
        self.adj[u * n + v] = true;
        self.adj[v * n + u] = true;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Element] {
        &self.labels
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.vertex_count() + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        let n = self.vertex_count();
        self.adj[v * n..(v + 1) * n].iter().filter(|&&b| b).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Vertex `i` of the result is vertex `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let m = order.len();
        let mut g = Self::empty(order.iter().map(|&i| self.labels[i]).collect());
        for a in 0..m {
            for b in 0..m {
                g.adj[a * m + b] = self.has_edge(order[a], order[b]);
            }
        }
        g
    }

    /// Reorders vertices so that the label sequence equals `labels`.
    /// `None` if the label sets differ.
    pub fn reordered_to(&self, labels: &[Element]) -> Option<Self> {
        if labels.len() != self.vertex_count() {
            return None;
        }
        let position: std::collections::HashMap<Element, usize> =
            self.labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        if position.len() != self.vertex_count() {
            return None;
        }
        let order = labels
            .iter()
            .map(|l| position.get(l).copied())
            .collect::<Option<Vec<_>>>()?;
        Some(self.permuted(&order))
    }
}

/// Definitional power graph: `u ~ v` iff `u != v` and one lies in the cyclic
/// subgroup generated by the other.
pub fn power_graph_oracle(spec: &GroupSpec) -> LabeledGraph {
    let elements = enumerate(spec);
    let n = elements.len();
    let mut member = vec![false; n * n];
    for (i, &x) in elements.iter().enumerate() {
        for y in cyclic_subgroup(spec, x) {
            let j = spec.index_of(y).expect("closed under products");
            member[i * n + j] = true;
        }
    }
    let mut g = LabeledGraph::empty(elements);
    for u in 0..n {
        for v in (u + 1)..n {
            if member[u * n + v] || member[v * n + u] {
                g.adj[u * n + v] = true;
                g.adj[v * n + u] = true;
            }
        }
    }
    g
}

/// Removes the identity vertex, keeping the remaining order.
pub fn delete_identity(g: &LabeledGraph) -> Result<LabeledGraph> {
    let e = g
        .labels
        .iter()
        .position(|l| l.is_identity())
        .ok_or(Error::IdentityMissing)?;
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != e).collect();
    Ok(g.permuted(&keep))
}

pub fn complement_graph(g: &LabeledGraph) -> LabeledGraph {
    let n = g.vertex_count();
    let mut out = LabeledGraph::empty(g.labels.clone());
    for u in 0..n {
        for v in 0..n {
            out.adj[u * n + v] = u != v && !g.has_edge(u, v);
        }
    }
    out
}
