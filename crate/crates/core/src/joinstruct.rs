//! H-join decompositions of (proper) power graphs.
//!
//! Every power graph handled here is a join over a small template graph whose
//! vertices are replaced by cliques or independent sets:
//!
//! * `Z_n`: the divisor graph `Omega_n`, block `H_d = {x : gcd(x, n) = d}` is a
//!   clique of size `phi(n / d)`.
//! * `D_n`: `Omega'_n` (`Omega_n` plus a vertex `R` pendant on `n`), rotation
//!   blocks as for `Z_n`, reflections form an independent block of size `n`.
//! * `Q_n`: the star `K_{1,n+1}` centred on `T_1 = {e, a^n}`, with
//!   `T_2 = <a> \ T_1` and pairs `T_i = {a^(i-3) b, a^(n+i-3) b}`.
//!
//! Proper variants drop the identity from its block (and the block itself when
//! it becomes empty). [`build_join`] always checks the assembled graph against
//! the definitional power graph and refuses structures that do not match.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{delete_identity, enumerate, power_graph_oracle, Element, Family, GroupSpec, LabeledGraph};
use crate::numtheory::{divisors, gcd, totient};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockLabel {
    Divisor(u64),
    /// The reflection vertex `R` of `Omega'_n`.
    Reflections,
    /// Star vertex `T_i`, 1-based.
    Star(usize),
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockLabel::Divisor(d) => write!(f, "{d}"),
            BlockLabel::Reflections => f.write_str("R"),
            BlockLabel::Star(i) => write!(f, "T{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateGraph {
    labels: Vec<BlockLabel>,
    adj: Vec<bool>,
}

impl TemplateGraph {
    fn new(labels: Vec<BlockLabel>, adjacent: impl Fn(BlockLabel, BlockLabel) -> bool) -> Self {
        let t = labels.len();
        let mut adj = vec![false; t * t];
        for i in 0..t {
            for j in 0..t {
                adj[i * t + j] = i != j && adjacent(labels[i], labels[j]);
            }
        }
        TemplateGraph { labels, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BlockLabel] {
        &self.labels
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.vertex_count() + j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let t = self.vertex_count();
        (0..t)
            .flat_map(|i| ((i + 1)..t).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn position(&self, label: BlockLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Induced template on all vertices except `label`.
    fn without(&self, label: BlockLabel) -> Self {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&i| self.labels[i] != label).collect();
        let t = keep.len();
        let mut adj = vec![false; t * t];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                adj[a * t + b] = self.has_edge(i, j);
            }
        }
        TemplateGraph {
            labels: keep.iter().map(|&i| self.labels[i]).collect(),
            adj,
        }
    }
}

fn divides(a: u64, b: u64) -> bool {
    b.is_multiple_of(a)
}

/// Divisors of `n`, adjacent when one divides the other.
pub fn omega(n: u64) -> Result<TemplateGraph> {
    let labels = divisors(n)?.iter().map(|&d| BlockLabel::Divisor(d)).collect();
    Ok(TemplateGraph::new(labels, |a, b| match (a, b) {
        (BlockLabel::Divisor(x), BlockLabel::Divisor(y)) => divides(x, y) || divides(y, x),
        _ => false,
    }))
}

/// `omega(n)` plus `R`, adjacent only to the divisor `n`.
pub fn omega_prime(n: u64) -> Result<TemplateGraph> {
    let mut labels: Vec<BlockLabel> = divisors(n)?.iter().map(|&d| BlockLabel::Divisor(d)).collect();
    labels.push(BlockLabel::Reflections);
    Ok(TemplateGraph::new(labels, |a, b| match (a, b) {
        (BlockLabel::Divisor(x), BlockLabel::Divisor(y)) => divides(x, y) || divides(y, x),
        (BlockLabel::Divisor(x), BlockLabel::Reflections) | (BlockLabel::Reflections, BlockLabel::Divisor(x)) => x == n,
        _ => false,
    }))
}

/// Star `K_{1,leaves}` on `T_1, ..., T_{leaves+1}` centred on `T_1`.
pub fn star_template(leaves: usize) -> TemplateGraph {
    let labels = (1..=leaves + 1).map(BlockLabel::Star).collect();
    TemplateGraph::new(labels, |a, b| {
        matches!((a, b), (BlockLabel::Star(1), _) | (_, BlockLabel::Star(1)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Complete,
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Power,
    Proper,
}

impl Variant {
    pub fn tag(self) -> &'static str {
        match self {
            Variant::Power => "power",
            Variant::Proper => "proper",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "power" => Ok(Variant::Power),
            "proper" => Ok(Variant::Proper),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinBlock {
    pub label: BlockLabel,
    pub kind: BlockKind,
    pub members: Vec<Element>,
    /// Total size of the template neighbours' blocks.
    pub join_degree: usize,
}

impl JoinBlock {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Degree inside the block.
    pub fn regularity(&self) -> usize {
        match self.kind {
            BlockKind::Complete => self.size().saturating_sub(1),
            BlockKind::Empty => 0,
        }
    }

    /// Degree of every member in the joined graph.
    pub fn vertex_degree(&self) -> usize {
        self.regularity() + self.join_degree
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinStructure {
    spec: GroupSpec,
    variant: Variant,
    template: TemplateGraph,
    blocks: Vec<JoinBlock>,
    validated: bool,
}

impl JoinStructure {
    /// True when produced by [`build_join`].
    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn template(&self) -> &TemplateGraph {
        &self.template
    }

    pub fn blocks(&self) -> &[JoinBlock] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(JoinBlock::size).collect()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(JoinBlock::size).sum()
    }

    /// Vertex labels in block order, the vertex order of [`assemble`].
    pub fn vertex_labels(&self) -> Vec<Element> {
        self.blocks.iter().flat_map(|b| b.members.iter().copied()).collect()
    }

    /// Offset of each block's first vertex in block order.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.blocks.len());
        let mut acc = 0;
        for b in &self.blocks {
            off.push(acc);
            acc += b.size();
        }
        off
    }
}

/// The definitional graph the structure must reproduce: the power graph, with
/// the identity removed for [`Variant::Proper`].
pub fn definitional_graph(spec: &GroupSpec, variant: Variant) -> Result<LabeledGraph> {
    if variant == Variant::Proper && spec.order() < 2 {
        return Err(Error::ProperTooSmall(spec.order()));
    }
    let g = power_graph_oracle(spec);
    match variant {
        Variant::Power => Ok(g),
        Variant::Proper => delete_identity(&g),
    }
}

/// Builds the join structure and validates it against the definitional graph.
pub fn build_join(spec: &GroupSpec, variant: Variant) -> Result<JoinStructure> {
    let mut js = build_join_unchecked(spec, variant)?;
    validate(&js)?;
    js.validated = true;
    Ok(js)
}

/// Builds the join structure without the oracle comparison.
pub fn build_join_unchecked(spec: &GroupSpec, variant: Variant) -> Result<JoinStructure> {
    if variant == Variant::Proper && spec.order() < 2 {
        return Err(Error::ProperTooSmall(spec.order()));
    }
    let n = spec.n();
    let (template, mut groups): (TemplateGraph, Vec<(BlockKind, Vec<Element>)>) = match spec.family() {
        Family::Cyclic => {
            let template = omega(n)?;
            let groups = rotation_blocks(&template, n, Element::Residue);
            (template, groups)
        }
        Family::Dihedral => {
            let template = omega_prime(n)?;
            let mut groups = rotation_blocks(&template, n, Element::Rotation);
            groups.push((BlockKind::Empty, (0..n).map(Element::Reflection).collect()));
            (template, groups)
        }
        Family::Dicyclic => {
            let template = star_template(n as usize + 1);
            let mut groups = vec![
                (BlockKind::Complete, vec![Element::APower(0), Element::APower(n)]),
                (
                    BlockKind::Complete,
                    (1..2 * n).filter(|&k| k != n).map(Element::APower).collect(),
                ),
            ];
            for k in 0..n {
                groups.push((BlockKind::Complete, vec![Element::BCoset(k), Element::BCoset(n + k)]));
            }
            (template, groups)
        }
    };

    let mut template = template;
    if variant == Variant::Proper {
        for (i, (_, members)) in groups.iter_mut().enumerate() {
            members.retain(|m| !m.is_identity());
            if members.is_empty() {
                template = template.without(template.labels()[i]);
            }
        }
        groups.retain(|(_, members)| !members.is_empty());
    }

    let sizes: Vec<usize> = groups.iter().map(|(_, m)| m.len()).collect();
    let t = template.vertex_count();
    debug_assert_eq!(t, groups.len());
    let blocks = groups
        .into_iter()
        .enumerate()
        .map(|(i, (kind, members))| JoinBlock {
            label: template.labels()[i],
            kind,
            members,
            join_degree: (0..t).filter(|&j| template.has_edge(i, j)).map(|j| sizes[j]).sum(),
        })
        .collect();
    Ok(JoinStructure {
        spec: *spec,
        variant,
        template,
        blocks,
        validated: false,
    })
}

/// `H_d = {x : gcd(x, n) = d}` for each divisor label, in template order.
fn rotation_blocks(template: &TemplateGraph, n: u64, element: fn(u64) -> Element) -> Vec<(BlockKind, Vec<Element>)> {
    template
        .labels()
        .iter()
        .filter_map(|label| match *label {
            BlockLabel::Divisor(d) => Some((
                BlockKind::Complete,
                (0..n).filter(|&x| gcd(x, n) == d).map(element).collect(),
            )),
            _ => None,
        })
        .collect()
}

/// Expands the join: cliques or independent sets per block, complete
/// bipartite connections between template-adjacent blocks.
pub fn assemble(js: &JoinStructure) -> LabeledGraph {
    let mut g = LabeledGraph::empty(js.vertex_labels());
    let offsets = js.block_offsets();
    let blocks = js.blocks();
    let link = |g: &mut LabeledGraph, u: usize, v: usize| {
        g.add_edge(u, v).expect("indices in range and distinct");
    };
    for (i, block) in blocks.iter().enumerate() {
        let range = offsets[i]..offsets[i] + block.size();
        if block.kind == BlockKind::Complete {
            for u in range.clone() {
                for v in (u + 1)..range.end {
                    link(&mut g, u, v);
                }
            }
        }
        for (j, other) in blocks.iter().enumerate().skip(i + 1) {
            if js.template().has_edge(i, j) {
                for u in range.clone() {
                    for v in offsets[j]..offsets[j] + other.size() {
                        link(&mut g, u, v);
                    }
                }
            }
        }
    }
    g
}

/// Compares [`assemble`] with the definitional graph, vertex for vertex.
pub fn validate(js: &JoinStructure) -> Result<()> {
    let expected = definitional_graph(js.spec(), js.variant())?;
    let mut labels = enumerate(js.spec());
    if js.variant() == Variant::Proper {
        labels.retain(|l| !l.is_identity());
    }
    let built = assemble(js).reordered_to(&labels).ok_or_else(|| {
        Error::StructureMismatch(format!(
            "blocks of {} ({}) do not partition the vertex set",
            js.spec(),
            js.variant()
        ))
    })?;
    if built == expected {
        return Ok(());
    }
    let n = labels.len();
    let (u, v) = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| built.has_edge(u, v) != expected.has_edge(u, v))
        .expect("graphs differ somewhere");
    Err(Error::StructureMismatch(format!(
        "{} ({}): {} ~ {} is {} in the join but {} in the power graph",
        js.spec(),
        js.variant(),
        labels[u],
        labels[v],
        if built.has_edge(u, v) { "an edge" } else { "a non-edge" },
        if expected.has_edge(u, v) {
            "an edge"
        } else {
            "a non-edge"
        },
    )))
}

/// Block sizes predicted by the totient for `Z_n`: `phi(n / d)` per divisor.
pub fn cyclic_block_sizes(n: u64) -> Result<Vec<usize>> {
    divisors(n)?
        .iter()
        .map(|&d| totient(n / d).map(|x| x as usize))
        .collect()
}
