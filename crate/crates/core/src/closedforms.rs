//! Closed-form spectra for the families where the join quotient collapses to
//! something small enough to solve by hand.
//!
//! Every evaluator builds its values from explicit formulas in `p`, `q`, `r`
//! and the parameters, never through the join engine, and refuses inputs
//! outside its hypotheses. Closed-form eigenvectors are given in the vertex order
//! recorded on the result.

use crate::error::{Error, Result};
use crate::groups::{complement_graph, delete_identity, power_graph_oracle, Element, GroupSpec, LabeledGraph};
use crate::joinstruct::{build_join, Variant};
use crate::numtheory::{factorize, gcd, is_prime};
use crate::spectra::jacobi::{jacobi, jacobi_eigenvalues, DEFAULT_TOL};
use crate::spectra::matrix::DenseSymMatrix;
use crate::spectra::params::{complement_params, UniversalParams};
use crate::spectra::quotient::quotient_k;
use crate::spectra::spectrum::GROUPING_REL_TOL;

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormEntry {
    pub value: f64,
    pub multiplicity: usize,
    pub source: &'static str,
    /// Closed-form eigenvectors; may be empty or fewer than `multiplicity`.
    pub vectors: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSpectrum {
    /// Order of the target matrix.
    pub dim: usize,
    pub entries: Vec<ClosedFormEntry>,
    /// Vertex order the vectors refer to; `None` for quotient coordinates.
    pub vertex_order: Option<Vec<Element>>,
}

impl ClosedFormSpectrum {
    fn new(dim: usize, vertex_order: Option<Vec<Element>>) -> Self {
        ClosedFormSpectrum {
            dim,
            entries: Vec::new(),
            vertex_order,
        }
    }

    /// Entries of multiplicity 0 are dropped.
    fn push(&mut self, value: f64, multiplicity: usize, source: &'static str, vectors: Vec<Vec<f64>>) {
        if multiplicity > 0 {
            self.entries.push(ClosedFormEntry {
                value,
                multiplicity,
                source,
                vectors,
            });
        }
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Every value repeated by multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn require_distinct_primes(p: u64, q: u64) -> Result<()> {
    require_prime(p)?;
    require_prime(q)?;
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    Ok(())
}

fn prime_power(p: u64, r: u32) -> Result<u64> {
    if r == 0 {
        return Err(Error::ZeroArgument);
    }
    p.checked_pow(r)
        .filter(|&n| n <= 1 << 20)
        .ok_or_else(|| Error::Hypothesis(format!("{p}^{r} is too large")))
}

/// `v` with 1 at `offset` and -1 at `offset + r`, length `dim`.
fn block_difference(dim: usize, offset: usize, r: usize) -> Vec<f64> {
    let mut x = vec![0.0; dim];
    x[offset] = 1.0;
    x[offset + r] = -1.0;
    x
}

/// Constant `value` on `range`, zero elsewhere.
fn block_constant(dim: usize, parts: &[(std::ops::Range<usize>, f64)]) -> Vec<f64> {
    let mut x = vec![0.0; dim];
    for (range, v) in parts {
        x[range.clone()].iter_mut().for_each(|e| *e = *v);
    }
    x
}

/// Eigenpairs of `[[a, b], [b, c]]`, larger eigenvalue first.
pub fn symmetric_2x2(a: f64, b: f64, c: f64) -> [(f64, [f64; 2]); 2] {
    let mean = 0.5 * (a + c);
    let radius = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    let hi = mean + radius;
    let lo = mean - radius;
    if b == 0.0 {
        return if a >= c {
            [(hi, [1.0, 0.0]), (lo, [0.0, 1.0])]
        } else {
            [(hi, [0.0, 1.0]), (lo, [1.0, 0.0])]
        };
    }
    let vec = |l: f64| {
        if (l - a).abs() >= (l - c).abs() {
            [b, l - a]
        } else {
            [l - c, b]
        }
    };
    [(hi, vec(hi)), (lo, vec(lo))]
}

/// `U(P(Z_{p^r}))`: the power graph is complete on `p^r` vertices.
pub fn zn_prime_power(p: u64, r: u32, params: &UniversalParams) -> Result<ClosedFormSpectrum> {
    require_prime(p)?;
    let n = prime_power(p, r)? as usize;
    let nf = n as f64;
    let (a, b, g, e) = (params.alpha(), params.beta(), params.gamma(), params.eta());
    let mut out = ClosedFormSpectrum::new(n, Some((0..n as u64).map(Element::Residue).collect()));
    out.push(
        a * (nf - 1.0) + b * (nf - 1.0) + e * nf + g,
        1,
        "complete-all-ones",
        vec![vec![1.0; n]],
    );
    out.push(
        -a + b * (nf - 1.0) + g,
        n - 1,
        "complete-difference",
        (1..n).map(|l| block_difference(n, 0, l)).collect(),
    );
    Ok(out)
}

/// Which parameter regime the `Z_pq` quotient falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZpqCase {
    /// `alpha + eta = 0`, `eta != 0`.
    Radical,
    /// `eta = 0`.
    EtaZero,
    /// Everything else with `alpha != 0`.
    General,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZpqQuotient {
    pub case: ZpqCase,
    pub p: u64,
    pub q: u64,
    /// Blocks ordered by gcd label `pq, 1, q, p` with sizes
    /// `1, (p-1)(q-1), p-1, q-1`.
    pub k: DenseSymMatrix,
    pub spectrum: ClosedFormSpectrum,
    params: [f64; 4],
}

impl ZpqQuotient {
    pub fn block_sizes(&self) -> [usize; 4] {
        zpq_sizes(self.p, self.q)
    }

    /// `det(K - lambda I)` by the product-sum expansion, valid when `eta = 0`.
    pub fn psi_eta_zero(&self, lambda: f64) -> Option<f64> {
        (self.case == ZpqCase::EtaZero).then(|| {
            let [alpha, ..] = self.params;
            let n = self.block_sizes().map(|x| x as f64);
            let kap: Vec<f64> = (0..4).map(|i| self.k.get(i, i)).collect();
            let a = (kap[0] - lambda) / n[0];
            let b = (kap[1] - lambda) / n[1];
            let c = (kap[2] - lambda) / n[2];
            let d = (kap[3] - lambda) / n[3];
            let a2 = alpha * alpha;
            n.iter().product::<f64>()
                * (a * b * c * d - a2 * (a * c + a * d + b * c + b * d + c * d) + 2.0 * a2 * alpha * (c + d))
        })
    }
}

fn zpq_sizes(p: u64, q: u64) -> [usize; 4] {
    [1, ((p - 1) * (q - 1)) as usize, (p - 1) as usize, (q - 1) as usize]
}

/// Quotient of `U(P(Z_pq))` built from its explicit entries. The only
/// non-adjacent block pair is `(q, p)`.
///
/// `params` is the raw `(alpha, beta, gamma, eta)`; `alpha = -eta` with
/// `eta = 0` means `alpha = 0` and is refused.
pub fn zn_pq_quotient(p: u64, q: u64, params: [f64; 4]) -> Result<ZpqQuotient> {
    require_distinct_primes(p, q)?;
    let [alpha, beta, gamma, eta] = params;
    let case = match (alpha + eta == 0.0, eta == 0.0) {
        (true, true) => return Err(Error::AlphaZero),
        (true, false) => ZpqCase::Radical,
        (false, true) => ZpqCase::EtaZero,
        (false, false) => ZpqCase::General,
    };
    UniversalParams::from_quadruple(params)?;
    let pq = (p * q) as f64;
    let (pf, qf) = (p as f64, q as f64);
    let sizes = zpq_sizes(p, q);
    let n = sizes.map(|x| x as f64);
    // Vertex degrees: {0} and generators see everything.
    let degree = [pq - 1.0, pq - 1.0, (pf - 1.0) * qf, (qf - 1.0) * pf];
    let k = DenseSymMatrix::from_fn(4, |i, j| {
        if i == j {
            alpha * (n[i] - 1.0) + beta * degree[i] + gamma + eta * n[i]
        } else {
            let theta = if (i, j) == (2, 3) { eta } else { alpha + eta };
            theta * (n[i] * n[j]).sqrt()
        }
    });

    let mut spectrum = ClosedFormSpectrum::new(4, None);
    match case {
        ZpqCase::Radical => {
            spectrum.push(beta * (pq - 1.0) + gamma + eta, 2, "zpq-radical-double", Vec::new());
            let centre = beta * (2.0 * pq - pf - qf) + 2.0 * (eta + gamma);
            let root = (beta * beta * (pf - qf).powi(2) + 4.0 * eta * eta * (pf - 1.0) * (qf - 1.0)).sqrt();
            spectrum.push((centre + root) / 2.0, 1, "zpq-radical-plus", Vec::new());
            spectrum.push((centre - root) / 2.0, 1, "zpq-radical-minus", Vec::new());
        }
        ZpqCase::EtaZero | ZpqCase::General => {
            let es = jacobi(&k, DEFAULT_TOL, true)?;
            let tag = if case == ZpqCase::EtaZero {
                "zpq-eta-zero-root"
            } else {
                "zpq-general-root"
            };
            for (value, v) in es.values.into_iter().zip(es.vectors.expect("requested")) {
                spectrum.push(value, 1, tag, vec![v]);
            }
        }
    }
    Ok(ZpqQuotient {
        case,
        p,
        q,
        k,
        spectrum,
        params,
    })
}

/// Vertex order for `Z_pq` closed forms: `{0}`, generators, nonzero
/// multiples of `q`, nonzero multiples of `p`.
pub fn zpq_vertex_order(p: u64, q: u64) -> Vec<Element> {
    let n = p * q;
    let mut order = vec![Element::Residue(0)];
    for d in [1, q, p] {
        order.extend((1..n).filter(|&x| gcd(x, n) == d).map(Element::Residue));
    }
    order
}

/// Ranges of the four `Z_pq` blocks in [`zpq_vertex_order`].
fn zpq_ranges(p: u64, q: u64) -> [std::ops::Range<usize>; 4] {
    let s = zpq_sizes(p, q);
    let o1 = 1;
    let o2 = o1 + s[1];
    let o3 = o2 + s[2];
    [0..1, o1..o2, o2..o3, o3..o3 + s[3]]
}

/// Block-difference vectors of every block in `ranges`.
fn all_block_differences(dim: usize, ranges: &[std::ops::Range<usize>]) -> Vec<Vec<f64>> {
    ranges
        .iter()
        .flat_map(|r| (1..r.len()).map(move |k| block_difference(dim, r.start, k)))
        .collect()
}

/// Adjacency spectrum of the complement of `P(Z_pq)`: two isolated vertices'
/// worth of blocks plus a complete bipartite `K_{p-1, q-1}`.
pub fn complement_zpq_adjacency(p: u64, q: u64) -> Result<ClosedFormSpectrum> {
    require_distinct_primes(p, q)?;
    let dim = (p * q) as usize;
    let ranges = zpq_ranges(p, q);
    let m = ((p - 1) * (q - 1)) as f64;
    let ratio = ((q - 1) as f64 / (p - 1) as f64).sqrt();

    let mut zero = all_block_differences(dim, &ranges);
    zero.push(block_constant(dim, &[(ranges[0].clone(), 1.0)]));
    zero.push(block_constant(dim, &[(ranges[1].clone(), 1.0)]));

    let mut out = ClosedFormSpectrum::new(dim, Some(zpq_vertex_order(p, q)));
    out.push(0.0, dim - 2, "complement-zpq-kernel", zero);
    for sign in [1.0, -1.0] {
        out.push(
            sign * m.sqrt(),
            1,
            "complement-zpq-bipartite",
            vec![block_constant(
                dim,
                &[(ranges[2].clone(), sign * ratio), (ranges[3].clone(), 1.0)],
            )],
        );
    }
    Ok(out)
}

/// `U` of the complement of `P(Z_pq)` for `eta = 0`.
pub fn complement_zpq_eta0(p: u64, q: u64, params: &UniversalParams) -> Result<ClosedFormSpectrum> {
    require_distinct_primes(p, q)?;
    if params.eta() != 0.0 {
        return Err(Error::Hypothesis(format!("eta must be 0, got {}", params.eta())));
    }
    let (a, b, g) = (params.alpha(), params.beta(), params.gamma());
    let (pf, qf) = (p as f64, q as f64);
    let dim = (p * q) as usize;
    let ranges = zpq_ranges(p, q);
    let phi = ((p - 1) * (q - 1)) as usize;

    let mut out = ClosedFormSpectrum::new(dim, Some(zpq_vertex_order(p, q)));
    let mut isolated = all_block_differences(dim, &ranges[..2]);
    isolated.push(block_constant(dim, &[(ranges[0].clone(), 1.0)]));
    isolated.push(block_constant(dim, &[(ranges[1].clone(), 1.0)]));
    out.push(g, phi + 1, "complement-zpq-isolated", isolated);
    out.push(
        b * (qf - 1.0) + g,
        (p - 2) as usize,
        "complement-zpq-q-block",
        all_block_differences(dim, &ranges[2..3]),
    );
    out.push(
        b * (pf - 1.0) + g,
        (q - 2) as usize,
        "complement-zpq-p-block",
        all_block_differences(dim, &ranges[3..4]),
    );

    let s = ((b * (pf - qf)).powi(2) + 4.0 * a * a * (pf - 1.0) * (qf - 1.0)).sqrt();
    let centre = (b * (pf + qf - 2.0) + 2.0 * g) / 2.0;
    let ratio = ((qf - 1.0) / (pf - 1.0)).sqrt();
    let cross = 2.0 * a * ((pf - 1.0) * (qf - 1.0)).sqrt();
    for sign in [1.0, -1.0] {
        // Quotient vector (0, 0, x, 1) on blocks (pq, 1, q, p).
        let x = cross / (b * (pf - qf) + sign * s);
        out.push(
            centre + sign * s / 2.0,
            1,
            "complement-zpq-radical",
            vec![block_constant(
                dim,
                &[(ranges[2].clone(), x * ratio), (ranges[3].clone(), 1.0)],
            )],
        );
    }
    Ok(out)
}

/// Vertex order for proper dihedral closed forms: nontrivial rotations, then
/// reflections.
pub fn dn_proper_vertex_order(n: u64) -> Vec<Element> {
    (1..n)
        .map(Element::Rotation)
        .chain((0..n).map(Element::Reflection))
        .collect()
}

/// `U(P*(D_{p^r}))` or its complement. The rotations form one clique of
/// `p^r - 1` vertices and the reflections are isolated.
pub fn proper_dn_prime_power(
    p: u64,
    r: u32,
    params: &UniversalParams,
    complemented: bool,
) -> Result<ClosedFormSpectrum> {
    require_prime(p)?;
    let n = prime_power(p, r)?;
    let nu = n as usize;
    let nf = n as f64;
    let dim = 2 * nu - 1;
    let (a, b, g, e) = (params.alpha(), params.beta(), params.gamma(), params.eta());
    let rot = 0..nu - 1;
    let refl = nu - 1..dim;

    let (rot_value, refl_value, k11, k22, k12, tag) = if complemented {
        (
            b * nf + g,
            -a + (2.0 * nf - 2.0) * b + g,
            b * nf + g + e * (nf - 1.0),
            a * (nf - 1.0) + b * (2.0 * nf - 2.0) + g + e * nf,
            (a + e) * ((nf - 1.0) * nf).sqrt(),
            "proper-dn-complement",
        )
    } else {
        (
            -a + (nf - 2.0) * b + g,
            g,
            (a + b) * (nf - 2.0) + g + e * (nf - 1.0),
            g + e * nf,
            e * ((nf - 1.0) * nf).sqrt(),
            "proper-dn",
        )
    };

    let mut out = ClosedFormSpectrum::new(dim, Some(dn_proper_vertex_order(n)));
    out.push(
        rot_value,
        nu - 2,
        tag,
        all_block_differences(dim, std::slice::from_ref(&rot)),
    );
    out.push(
        refl_value,
        nu - 1,
        tag,
        all_block_differences(dim, std::slice::from_ref(&refl)),
    );
    let scale = (nf / (nf - 1.0)).sqrt();
    for (value, v) in symmetric_2x2(k11, k12, k22) {
        out.push(
            value,
            1,
            tag,
            vec![block_constant(
                dim,
                &[(rot.clone(), v[0] * scale), (refl.clone(), v[1])],
            )],
        );
    }
    Ok(out)
}

/// Graph variants covered by the dicyclic quotient formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QnVariant {
    Power,
    Complement,
    ProperPower,
    ProperComplement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QnRepeated {
    pub value: f64,
    /// The formula multiplicity, `n - 1`.
    pub multiplicity: usize,
    /// Eigenvalues of the quotient within tolerance of `value`.
    pub observed_multiplicity: usize,
    pub k: DenseSymMatrix,
}

/// The repeated eigenvalue of the dicyclic quotient, produced by the `n`
/// coset blocks `{a^k b, a^{n+k} b}`. Refused unless the join structure
/// validates, which happens exactly for `n` a power of two.
pub fn qn_quotient_repeated_eigenvalue(n: u64, params: &UniversalParams, variant: QnVariant) -> Result<QnRepeated> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("n must be at least 2, got {n}")));
    }
    let spec = GroupSpec::dicyclic(n)?;
    let structural = match variant {
        QnVariant::Power | QnVariant::Complement => Variant::Power,
        QnVariant::ProperPower | QnVariant::ProperComplement => Variant::Proper,
    };
    let js = build_join(&spec, structural)?;
    let (a, b, g) = (params.alpha(), params.beta(), params.gamma());
    let nf = n as f64;
    let (value, effective) = match variant {
        QnVariant::Power => (a + 3.0 * b + g, *params),
        QnVariant::ProperPower => (a + 2.0 * b + g, *params),
        QnVariant::Complement | QnVariant::ProperComplement => (
            -2.0 * a + (4.0 * nf - 4.0) * b + g,
            complement_params(params, js.order()),
        ),
    };
    let k = quotient_k(&js, &effective).k().clone();
    let tol = GROUPING_REL_TOL * k.inf_norm().max(1.0);
    let observed_multiplicity = jacobi_eigenvalues(&k, DEFAULT_TOL)?
        .iter()
        .filter(|x| (*x - value).abs() <= tol)
        .count();
    Ok(QnRepeated {
        value,
        multiplicity: n as usize - 1,
        observed_multiplicity,
        k,
    })
}

/// Vertex order for the `Q_2` example: `{e, a^2}`, `{a, a^3}`, `{b, a^2 b}`,
/// `{ab, a^3 b}`.
pub fn q2_vertex_order() -> Vec<Element> {
    vec![
        Element::APower(0),
        Element::APower(2),
        Element::APower(1),
        Element::APower(3),
        Element::BCoset(0),
        Element::BCoset(2),
        Element::BCoset(1),
        Element::BCoset(3),
    ]
}

/// `U` of the complement of `P(Q_2)`.
pub fn q2_complement_example(params: &UniversalParams) -> Result<ClosedFormSpectrum> {
    let (a, b, g, e) = (params.alpha(), params.beta(), params.gamma(), params.eta());
    let dim = 8;
    let blocks: Vec<std::ops::Range<usize>> = (0..4).map(|i| 2 * i..2 * i + 2).collect();
    let lift = |nu: [f64; 4]| -> Vec<f64> { nu.iter().flat_map(|&x| [x, x]).collect() };

    let mut out = ClosedFormSpectrum::new(dim, Some(q2_vertex_order()));
    out.push(g, 1, "q2-complement-centre", all_block_differences(dim, &blocks[..1]));
    out.push(
        4.0 * b + g,
        3,
        "q2-complement-coset",
        all_block_differences(dim, &blocks[1..]),
    );

    let s = a + b + e;
    let radical = (a * a + b * b + 4.0 * e * e + 2.0 * a * b + 2.0 * a * e + 2.0 * b * e).sqrt();
    let centre = 2.0 * a + 2.0 * b + g + 4.0 * e;
    if e != 0.0 {
        for sign in [1.0, -1.0] {
            let x = (-s + sign * radical) / e;
            out.push(
                centre + sign * 2.0 * radical,
                1,
                "q2-complement-radical",
                vec![lift([x, 1.0, 1.0, 1.0])],
            );
        }
    } else {
        // Reduced 2x2 on span{(1,0,0,0), (0,1,1,1)/sqrt(3)}.
        let r3 = 3f64.sqrt();
        for (value, v) in symmetric_2x2(g + 2.0 * e, 2.0 * r3 * e, 4.0 * a + 4.0 * b + g + 6.0 * e) {
            let w = v[1] / r3;
            out.push(value, 1, "q2-complement-radical", vec![lift([v[0], w, w, w])]);
        }
    }
    out.push(
        -2.0 * a + 4.0 * b + g,
        2,
        "q2-complement-difference",
        vec![lift([0.0, 1.0, -1.0, 0.0]), lift([0.0, 1.0, 0.0, -1.0])],
    );
    Ok(out)
}

/// The target graph of a closed form in its vertex order.
pub fn graph_in_order(spec: &GroupSpec, proper: bool, complemented: bool, order: &[Element]) -> Result<LabeledGraph> {
    let mut g = power_graph_oracle(spec);
    if proper {
        g = delete_identity(&g)?;
    }
    if complemented {
        g = complement_graph(&g);
    }
    g.reordered_to(order).ok_or_else(|| Error::DimensionMismatch {
        expected: g.vertex_count(),
        got: order.len(),
    })
}

/// True when `n` is a power of two, the dicyclic range covered above.
pub fn is_power_of_two(n: u64) -> bool {
    factorize(n)
        .map(|f| f.factors().iter().all(|&(p, _)| p == 2))
        .unwrap_or(false)
}
