//! Gluing two elliptic curves along an isomorphism of their 2-torsion.
//!
//! [`glue_p10`] turns `y^2 = f`, `y^2 = g` and a pairing of the roots of `f`
//! with those of `g` into the sextic `h` of the quotient curve, computed
//! twice (three-quadratic product and `kappa * prod(gamma x^2 - 1)`).
//! [`verify_reconstruction`] runs it on the family models over `F_p` and
//! compares the outcome with `C_t` and `C_{-t}`.

use crate::error::{Error, Result};
use crate::exact::{
    roots_in_splitting_field, serial::CoeffString, Field, FiniteField, Fp, Fq, Poly, Ring,
};
use crate::families::{family_sextic, models_at, FamilyId, FamilySpec, Parity};
use crate::igusa::{igusa_vector, weighted_equal, IgusaVector};
use serde::Serialize;

/// Two monic cubics and their roots, paired by index.
#[derive(Clone, Debug)]
pub struct GlueInput<F: Ring> {
    pub f: Poly<F>,
    pub g: Poly<F>,
    pub alphas: [F; 3],
    pub betas: [F; 3],
}

impl<F: Field> GlueInput<F> {
    fn validate(&self) -> Result<()> {
        let linear = |r: &[F; 3]| {
            let z = r[0].zero_like();
            r.iter()
                .fold(Poly::one(&z), |acc, a| acc.mul(&Poly::linear_root(a)))
        };
        if linear(&self.alphas) != self.f || linear(&self.betas) != self.g {
            return Err(Error::Precondition(
                "roots do not reproduce the cubics".into(),
            ));
        }
        for r in [&self.alphas, &self.betas] {
            if r[0] == r[1] || r[1] == r[2] || r[0] == r[2] {
                return Err(Error::Degenerate(
                    "repeated roots, gamma_ij undefined".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlueResult<F: Ring> {
    pub a1: F,
    pub a2: F,
    pub b1: F,
    pub b2: F,
    pub big_a: F,
    pub big_b: F,
    /// `(gamma_32, gamma_21, gamma_13)`.
    pub gammas: [F; 3],
    pub kappa: F,
    pub h: Poly<F>,
}

/// `16 * prod_{i<j} (r_i - r_j)^2`, the discriminant of `y^2 = prod(x - r_i)`.
fn curve_disc<F: Field>(r: &[F; 3]) -> F {
    let d = r[0].sub(&r[1]).mul(&r[1].sub(&r[2])).mul(&r[2].sub(&r[0]));
    d.square().scale_int(16)
}

/// The quotient sextic of `E x E' / graph(alpha_i -> beta_i)`.
///
/// `alpha` and `beta` in the `kappa` form are the root-difference products
/// `(alpha_3 - alpha_2)(alpha_2 - alpha_1)(alpha_1 - alpha_3)`; both forms of
/// `h` are computed and must agree.
pub fn glue_p10<F: Field>(input: &GlueInput<F>) -> Result<GlueResult<F>> {
    input.validate()?;
    let [x1, x2, x3] = &input.alphas;
    let [y1, y2, y3] = &input.betas;
    // differences in the cyclic order 32, 21, 13
    let da = [x3.sub(x2), x2.sub(x1), x1.sub(x3)];
    let db = [y3.sub(y2), y2.sub(y1), y1.sub(y3)];
    let gammas: [F; 3] = std::array::from_fn(|k| db[k].div(&da[k]).expect("distinct roots"));
    let zero = x1.zero_like();
    let one = zero.one_like();
    let quad = |c: &F| Poly::new(vec![one.neg(), zero.clone(), c.clone()], zero.clone());
    let gamma_form = gammas
        .iter()
        .fold(Poly::one(&zero), |acc, c| acc.mul(&quad(c)));
    if gamma_form.degree() != Some(6) || !gamma_form.is_separable() {
        return Err(Error::IsomorphismRestriction);
    }

    let sum = |num: &[F; 3], den: &[F; 3]| -> F {
        (0..3).fold(zero.clone(), |acc, k| {
            acc.add(&num[k].square().div(&den[k]).unwrap())
        })
    };
    let a1 = sum(&da, &db);
    let b1 = sum(&db, &da);
    let a2 = x1.mul(&db[0]).add(&x2.mul(&db[2])).add(&x3.mul(&db[1]));
    let b2 = y1.mul(&da[0]).add(&y2.mul(&da[2])).add(&y3.mul(&da[1]));
    for (name, v) in [("a1", &a1), ("a2", &a2), ("b1", &b1), ("b2", &b2)] {
        if v.is_zero() {
            return Err(Error::Degenerate(format!("{name} = 0")));
        }
    }
    let big_a = curve_disc(&input.betas).mul(&a1).div(&a2).unwrap();
    let big_b = curve_disc(&input.alphas).mul(&b1).div(&b2).unwrap();

    // A (x2 - x1)(x1 - x3) x^2 + B (y2 - y1)(y1 - y3), and cyclic shifts
    let mut h = Poly::one(&zero);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let c2 = big_a.mul(&da[i]).mul(&da[j]);
        let c0 = big_b.mul(&db[i]).mul(&db[j]);
        h = h.mul(&Poly::new(vec![c0, zero.clone(), c2], zero.clone()));
    }
    let alpha = da[0].mul(&da[1]).mul(&da[2]);
    let beta = db[0].mul(&db[1]).mul(&db[2]);
    let kappa = big_a.pow(3).mul(&alpha.pow(3)).div(&beta).unwrap();
    if h != gamma_form.scale(&kappa) {
        return Err(Error::Internal("the two forms of h disagree".into()));
    }
    if !h.is_separable() {
        return Err(Error::IsomorphismRestriction);
    }
    Ok(GlueResult {
        a1,
        a2,
        b1,
        b2,
        big_a,
        big_b,
        gammas,
        kappa,
        h,
    })
}

/// A group isomorphism `E[2] -> E'[2]`: nonzero point `i` of `E` goes to
/// point `pairing[i]` of `E'` (indices 0..3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorsionGraph {
    pub parity: Parity,
    pub pairing: [usize; 3],
}

/// The two graphs whose images under `(P, Q) -> (P, Q + psi(P))` are again
/// graphs, when `psi` maps point `i` to point `i`.
///
/// Odd parity: the two 3-cycles. Even parity: `distinguished` is the index
/// of the kernel point `Q` of `psi` and of its partner `Q'`; the graphs fix
/// it and pair the other two directly or crosswise.
pub fn admissible_graphs(parity: Parity, distinguished: usize) -> [TorsionGraph; 2] {
    let g = |pairing| TorsionGraph { parity, pairing };
    match parity {
        Parity::Odd => [g([1, 2, 0]), g([2, 0, 1])],
        Parity::Even => {
            let q = distinguished % 3;
            let (a, b) = ((q + 1) % 3, (q + 2) % 3);
            let mut cross = [q; 3];
            cross[a] = b;
            cross[b] = a;
            [g([0, 1, 2]), g(cross)]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AlphaImage {
    Graph(TorsionGraph),
    /// Image of each point; `None` is the origin.
    NotAGraph(Vec<Option<usize>>),
}

/// Sum in `(Z/2)^2` with nonzero elements `0, 1, 2`.
fn add_two_torsion(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) if x == y => None,
        (Some(x), Some(y)) => Some(3 - x - y),
    }
}

/// Image of a graph under `(P, Q) -> (P, Q + psi(P))`, where `psi[i]` is the
/// image of point `i` (`None` for the origin).
pub fn alpha_image(graph: &TorsionGraph, psi: &[Option<usize>; 3]) -> AlphaImage {
    let image: Vec<Option<usize>> = (0..3)
        .map(|i| add_two_torsion(Some(graph.pairing[i]), psi[i]))
        .collect();
    let mut seen = [false; 3];
    for v in &image {
        match v {
            Some(j) if !seen[*j] => seen[*j] = true,
            _ => return AlphaImage::NotAGraph(image),
        }
    }
    let pairing = std::array::from_fn(|i| image[i].unwrap());
    AlphaImage::Graph(TorsionGraph {
        parity: graph.parity,
        pairing,
    })
}

/// `x -> 1/x, y -> y/x^3`: the reversed sextic.
pub fn inversion_isomorphism<F: Field>(sextic: &Poly<F>) -> Result<Poly<F>> {
    if sextic.degree() != Some(6) {
        return Err(Error::Precondition("expected a sextic".into()));
    }
    if sextic.coeff(0).is_zero() {
        return Err(Error::Precondition("zero constant term".into()));
    }
    Ok(sextic.reverse(6))
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn compose(p: &[usize; 3], q: &[usize; 3]) -> [usize; 3] {
    std::array::from_fn(|i| p[q[i]])
}

/// Which `C` a glued curve matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    #[serde(rename = "C_t")]
    Plus,
    #[serde(rename = "C_-t")]
    Minus,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphDiagnostics {
    pub pairing: [usize; 3],
    pub galois_consistent: bool,
    pub error: Option<String>,
    pub h: Option<Vec<String>>,
    pub a_b_in_base_field: Option<bool>,
    pub matches: Option<Side>,
    /// `y^2 = h` and the matched `C` agree up to a twist by a square of `F_p`.
    pub twist_matches: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReconstructionReport {
    pub family: FamilyId,
    pub p: u64,
    pub t: u64,
    pub splitting_degree: usize,
    pub graphs_tried: usize,
    pub classes_found: usize,
    /// Pairings `(psi, [graph 1, graph 2])` whose classes are `{C_t, C_{-t}}`.
    pub matching_candidates: Vec<[[usize; 3]; 3]>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub a_b_in_base_field: bool,
    /// Every graph in a matching candidate gives `C_{+-t}` with its twist
    /// factor, not just up to geometric isomorphism.
    pub twists_match: bool,
    pub graphs: Vec<GraphDiagnostics>,
}

impl ReconstructionReport {
    pub fn passed(&self) -> bool {
        self.matched && self.a_b_in_base_field
    }
}

struct Glued {
    diag: GraphDiagnostics,
    class: Option<IgusaVector<Fq>>,
}

fn in_base<'a>(xs: impl IntoIterator<Item = &'a Fq>) -> bool {
    xs.into_iter().all(|x| x.in_prime_field())
}

/// Glue `E_{s(t)}` and `E'_{s(t)}` over `F_p` along every Galois-consistent
/// root pairing and check that, for some choice of `psi` on the 2-torsion,
/// the two admissible graphs produce exactly `{C_t, C_{-t}}` up to
/// geometric isomorphism.
pub fn verify_reconstruction(spec: &FamilySpec, t: &Fp) -> Result<ReconstructionReport> {
    let p = t.modulus();
    if p <= 5 {
        return Err(Error::Precondition(format!("p = {p} must exceed 5")));
    }
    let (tw_plus, c_plus) = family_sextic(spec, t)?;
    let (tw_minus, c_minus) = family_sextic(spec, &t.neg())?;
    let (e, ep) = models_at(spec, t)?;
    let (f, g) = (e.cubic().clone(), ep.cubic().clone());
    let (k, roots) = roots_in_splitting_field(&f.mul(&g))?;
    let to_k = |q: &Poly<Fp>| q.map(|c| k.from_fp(c), k.zero());
    let (fk, gk) = (to_k(&f), to_k(&g));
    let pick = |q: &Poly<Fq>| -> Result<[Fq; 3]> {
        let rs: Vec<Fq> = roots
            .iter()
            .map(|r| r.value.clone())
            .filter(|r| q.eval(r).is_zero())
            .collect();
        rs.try_into()
            .map_err(|_| Error::Internal("cubic without three distinct roots".into()))
    };
    let (alphas, betas) = (pick(&fk)?, pick(&gk)?);
    let frob_index = |r: &[Fq; 3]| -> [usize; 3] {
        std::array::from_fn(|i| {
            let fr = r[i].frobenius();
            r.iter()
                .position(|x| *x == fr)
                .expect("Frobenius permutes the roots")
        })
    };
    let (fa, fb) = (frob_index(&alphas), frob_index(&betas));
    let consistent = |pi: &[usize; 3]| (0..3).all(|i| fb[pi[i]] == pi[fa[i]]);

    let twisted = [c_plus.scale(&tw_plus), c_minus.scale(&tw_minus)];
    let target = [
        igusa_vector(&to_k(&twisted[0]))?,
        igusa_vector(&to_k(&twisted[1]))?,
    ];
    let glue_one = |pi: &[usize; 3]| -> Glued {
        let mut diag = GraphDiagnostics {
            pairing: *pi,
            galois_consistent: consistent(pi),
            error: None,
            h: None,
            a_b_in_base_field: None,
            matches: None,
            twist_matches: None,
        };
        let input = GlueInput {
            f: fk.clone(),
            g: gk.clone(),
            alphas: alphas.clone(),
            betas: std::array::from_fn(|i| betas[pi[i]].clone()),
        };
        let r = match glue_p10(&input) {
            Ok(r) => r,
            Err(e) => {
                diag.error = Some(e.to_string());
                return Glued { diag, class: None };
            }
        };
        diag.a_b_in_base_field = Some(in_base([&r.big_a, &r.big_b]));
        diag.h = Some(r.h.coeffs().iter().map(|c| c.coeff_string()).collect());
        let class = match igusa_vector(&r.h) {
            Ok(c) => c,
            Err(e) => {
                diag.error = Some(e.to_string());
                return Glued { diag, class: None };
            }
        };
        for (i, side) in [Side::Plus, Side::Minus].into_iter().enumerate() {
            if weighted_equal(&target[i], &class, true).unwrap_or(false) {
                diag.matches = Some(side);
                if in_base(r.h.coeffs()) {
                    let hp = r.h.map(|c| c.to_fp().unwrap(), t.zero_like());
                    let model = &twisted[i];
                    let twist =
                        || weighted_equal(&igusa_vector(model)?, &igusa_vector(&hp)?, false);
                    diag.twist_matches = twist().ok();
                }
                break;
            }
        }
        Glued {
            diag,
            class: Some(class),
        }
    };
    let glued: Vec<Glued> = PERMUTATIONS.iter().map(glue_one).collect();
    let index = |pi: &[usize; 3]| PERMUTATIONS.iter().position(|q| q == pi).unwrap();

    // candidate psi (as a pairing) with its two admissible graphs
    let mut candidates: Vec<[[usize; 3]; 3]> = Vec::new();
    match spec.parity() {
        Parity::Odd => {
            for psi in PERMUTATIONS {
                let [g1, g2] = admissible_graphs(Parity::Odd, 0);
                candidates.push([psi, compose(&psi, &g1.pairing), compose(&psi, &g2.pairing)]);
            }
        }
        Parity::Even => {
            for q in 0..3 {
                for psi in PERMUTATIONS {
                    // psi fixes the labelling; q is the kernel point, psi[q] its partner
                    let [g1, g2] = admissible_graphs(Parity::Even, q);
                    let c = [psi, compose(&psi, &g1.pairing), compose(&psi, &g2.pairing)];
                    if !candidates
                        .iter()
                        .any(|d| d[1..] == c[1..] || (d[1] == c[2] && d[2] == c[1]))
                    {
                        candidates.push(c);
                    }
                }
            }
        }
    }
    let mut matching = Vec::new();
    for c in &candidates {
        if !consistent(&c[1]) || !consistent(&c[2]) {
            continue;
        }
        let sides: Vec<Option<Side>> = c[1..]
            .iter()
            .map(|g| glued[index(g)].diag.matches)
            .collect();
        if sides.contains(&Some(Side::Plus)) && sides.contains(&Some(Side::Minus)) {
            matching.push(*c);
        }
    }

    let tried: Vec<&Glued> = glued.iter().filter(|g| g.diag.galois_consistent).collect();
    let mut classes: Vec<&IgusaVector<Fq>> = Vec::new();
    for g in &tried {
        if let Some(c) = &g.class {
            if !classes
                .iter()
                .any(|d| weighted_equal(d, c, true).unwrap_or(false))
            {
                classes.push(c);
            }
        }
    }
    let twists_match = matching
        .iter()
        .flat_map(|c| c[1..].iter().map(|g| glued[index(g)].diag.twist_matches))
        .all(|m| m == Some(true));
    let a_b_in_base_field = tried
        .iter()
        .all(|g| g.diag.a_b_in_base_field != Some(false));
    Ok(ReconstructionReport {
        family: spec.id,
        p,
        t: t.value(),
        splitting_degree: k.degree(),
        graphs_tried: tried.len(),
        classes_found: classes.len(),
        matched: !matching.is_empty(),
        matching_candidates: matching,
        a_b_in_base_field,
        twists_match,
        graphs: glued.into_iter().map(|g| g.diag).collect(),
    })
}

#[cfg(test)]
mod tests;
