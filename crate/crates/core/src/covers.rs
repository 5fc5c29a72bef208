//! The mod-p cellular chain complex of the regular cover `X_N → K_P`
//! determined by a homomorphism `π₁(K_P) → H` onto (or into) a finite
//! ordered group.
//!
//! Cells of the cover are `g·v`, `g·γ̃_j`, `g·β̃_i` for `g ∈ H`. With chains
//! written as row vectors, `∂₂` is the `|H|m × |H|n` block matrix whose
//! `(i, j)` block is the equivariant matrix with identity row
//! `B_ij(e) = Σ sign·δ_{φ(prefix)}` taken over the Fox derivative
//! `∂R_i/∂a_j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpexact::{check_cap, FpMatrix, Prime};
use crate::groupring::{elementary_abelian_index, equivariant_matrix, make_elementary_abelian, GroupRingElement, OrderedGroup};
use crate::presentations::{complex_summary, FreeWord, Normalization, Presentation};

#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: Presentation,
    target: OrderedGroup,
    images: Vec<usize>,
    image_size: usize,
}

impl Homomorphism {
    /// Checks that every relator maps to the identity.
    pub fn new(source: &Presentation, target: &OrderedGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.n_generators() {
            return Err(Error::Dimension(format!(
                "{} images given for {} generators",
                images.len(),
                source.n_generators()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= target.size()) {
            return Err(Error::OutOfRange(format!(
                "image {bad} is not an element of a group of order {}",
                target.size()
            )));
        }
        let image_size = target.subgroup_generated(&images).iter().filter(|&&b| b).count();
        let hom = Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images,
            image_size,
        };
        for (index, rel) in source.relators().iter().enumerate() {
            let image = hom.word_image(rel);
            if image != target.identity() {
                return Err(Error::IncompatibleHomomorphism {
                    index,
                    relator: rel.render(source.generator_names()),
                    image,
                });
            }
        }
        Ok(hom)
    }

    /// Every generator to the identity of the trivial group.
    pub fn trivial(source: &Presentation) -> Result<Self> {
        let target = OrderedGroup::from_table("1", 1, vec![0])?;
        Homomorphism::new(source, &target, vec![0; source.n_generators()])
    }

    /// Generator `j` to the vector `vectors[j]` of `(Z_p)^r`.
    pub fn to_elementary_abelian(source: &Presentation, p: Prime, vectors: &[Vec<u32>]) -> Result<Self> {
        let r = vectors.first().map(Vec::len).unwrap_or(0);
        if r == 0 || vectors.iter().any(|v| v.len() != r) {
            return Err(Error::Dimension("image vectors must share a positive length".into()));
        }
        let target = make_elementary_abelian(p, r)?;
        let images = vectors
            .iter()
            .map(|v| elementary_abelian_index(p, v))
            .collect::<Result<Vec<_>>>()?;
        Homomorphism::new(source, &target, images)
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &OrderedGroup {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Order of the subgroup generated by the images.
    pub fn image_size(&self) -> usize {
        self.image_size
    }

    pub fn is_surjective(&self) -> bool {
        self.image_size == self.target.size()
    }

    pub fn word_image(&self, w: &FreeWord) -> usize {
        let t = &self.target;
        w.letters().iter().fold(t.identity(), |acc, l| {
            let g = self.images[l.gen];
            t.mul(acc, if l.inverse { t.inverse(g) } else { g })
        })
    }

    /// The same homomorphism seen on a normalized presentation.
    pub fn transport(&self, norm: &Normalization) -> Result<Homomorphism> {
        let images = norm.generator_words.iter().map(|w| self.word_image(w)).collect();
        Homomorphism::new(&norm.presentation, &self.target, images)
    }

    /// The same homomorphism into `target.reordered(perm)`.
    pub fn reordered(&self, perm: &[usize]) -> Result<Homomorphism> {
        let target = self.target.reordered(perm)?;
        let images = self.images.iter().map(|&g| perm[g]).collect();
        Homomorphism::new(&self.source, &target, images)
    }
}

/// Parses one line per generator: `name -> (c1, …, cr)` for the group
/// `make_elementary_abelian(p, r)`, or `name -> k` for an element index.
/// Blank lines and `#` comments are ignored.
pub fn parse_homomorphism(text: &str, source: &Presentation, target: &OrderedGroup, p: Prime) -> Result<Homomorphism> {
    let mut images: Vec<Option<usize>> = vec![None; source.n_generators()];
    let mut ea_rank: Option<usize> = None;
    for (lno, raw) in text.lines().enumerate() {
        let line = lno + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let syntax = |column: usize, message: String| Error::Syntax { line, column, message };
        let arrow = body
            .find("->")
            .ok_or_else(|| syntax(1, "expected `name -> image`".into()))?;
        let name = body[..arrow].trim();
        let rhs = body[arrow + 2..].trim();
        let rhs_col = arrow + 3 + (body[arrow + 2..].len() - body[arrow + 2..].trim_start().len());
        let name_col = 1 + body.len() - body.trim_start().len();
        let gen = source.generator_index(name).ok_or_else(|| Error::UnknownGenerator {
            name: name.to_string(),
            line,
            column: name_col,
        })?;
        if images[gen].is_some() {
            return Err(syntax(name_col, format!("generator `{name}` mapped twice")));
        }
        let image = if let Some(inner) = rhs.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| syntax(rhs_col, "missing `)`".into()))?;
            let coords = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| syntax(rhs_col, format!("`{rhs}` is not a tuple of residues")))?;
            if coords.iter().any(|&c| c >= p.get()) {
                return Err(syntax(rhs_col, format!("entries of `{rhs}` must lie in [0, {p})")));
            }
            match ea_rank {
                Some(r) if r != coords.len() => {
                    return Err(syntax(rhs_col, "tuples of different lengths".into()));
                }
                Some(_) => {}
                None => {
                    let expected = (p.get() as u128).checked_pow(coords.len() as u32);
                    if expected != Some(target.size() as u128)
                        || !make_elementary_abelian(p, coords.len())?.same_as(target)
                    {
                        return Err(Error::Inconsistent(format!(
                            "tuple images need the target (Z_{p})^{} in its standard order",
                            coords.len()
                        )));
                    }
                    ea_rank = Some(coords.len());
                }
            }
            elementary_abelian_index(p, &coords)?
        } else {
            rhs.parse::<usize>()
                .map_err(|_| syntax(rhs_col, format!("`{rhs}` is neither a tuple nor an element index")))?
        };
        images[gen] = Some(image);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(j, x)| x.ok_or_else(|| Error::Inconsistent(format!("generator `{}` has no image", source.generator_names()[j]))))
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(source, target, images)
}

/// [`parse_homomorphism`] onto `(Z_p)^r`, with `r` read off the first tuple.
pub fn parse_homomorphism_elementary(text: &str, source: &Presentation, p: Prime) -> Result<Homomorphism> {
    let rank = text
        .lines()
        .filter_map(|l| {
            let body = l.split('#').next().unwrap_or("");
            body.find("->").map(|i| body[i + 2..].trim().to_string())
        })
        .find(|rhs| rhs.starts_with('('))
        .map(|rhs| rhs.split(',').count());
    match rank {
        Some(r) => parse_homomorphism(text, source, &make_elementary_abelian(p, r)?, p),
        // Without tuples only the trivial group is implied.
        None if text.lines().all(|l| !l.split('#').next().unwrap_or("").contains("->")) => {
            if source.n_generators() == 0 {
                Homomorphism::trivial(source)
            } else {
                Err(Error::Inconsistent(format!(
                    "generator `{}` has no image",
                    source.generator_names()[0]
                )))
            }
        }
        None => Err(Error::Inconsistent(
            "element-index images need an explicit target group".into(),
        )),
    }
}

/// The block `B_ij`, stored as its identity row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantBlock {
    seed: GroupRingElement,
}

impl EquivariantBlock {
    pub fn seed_row(&self) -> &GroupRingElement {
        &self.seed
    }

    /// Row `g` is `δ_g ∗ seed`.
    pub fn materialize(&self) -> Result<FpMatrix> {
        equivariant_matrix(&self.seed)
    }

    pub fn is_balanced(&self) -> bool {
        self.seed.is_balanced()
    }
}

#[derive(Debug, Clone)]
pub struct CoverComplex {
    hom: Homomorphism,
    p: Prime,
    blocks: Vec<Vec<EquivariantBlock>>,
    d1: FpMatrix,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
    pub hrk: usize,
    pub euler: i64,
}

impl CoverComplex {
    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    /// `blocks()[i][j] = B_ij` for relator `i`, generator `j`.
    pub fn blocks(&self) -> &[Vec<EquivariantBlock>] {
        &self.blocks
    }

    /// `∂₁`: `|H|n × |H|`, row `(j, g)` is `δ_{g·φ(a_j)} - δ_g`.
    pub fn d1(&self) -> &FpMatrix {
        &self.d1
    }

    /// `∂₂`, materialized: row `i|H| + g`, column `j|H| + h`.
    pub fn d2(&self) -> Result<FpMatrix> {
        let h = self.hom.target.size();
        let n = self.hom.source.n_generators();
        let m = self.blocks.len();
        let mut out = FpMatrix::zeros(h * m, h * n, self.p)?;
        for (i, row) in self.blocks.iter().enumerate() {
            for (j, block) in row.iter().enumerate() {
                let b = block.materialize()?;
                for g in 0..h {
                    for x in 0..h {
                        out.set(i * h + g, j * h + x, b.get(g, x));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn betti(&self) -> [usize; 3] {
        [self.b0, self.b1, self.b2]
    }

    pub fn components(&self) -> usize {
        self.hom.target.size() / self.hom.image_size
    }
}

fn seed_rows(pres: &Presentation, hom: &Homomorphism, p: Prime) -> Vec<Vec<Vec<u32>>> {
    let t = hom.target();
    let size = t.size();
    let n = pres.n_generators();
    pres.relators()
        .iter()
        .map(|rel| {
            let mut rows = vec![vec![0u32; size]; n];
            let mut at = t.identity();
            for l in rel.letters() {
                let g = hom.images()[l.gen];
                if l.inverse {
                    at = t.mul(at, t.inverse(g));
                    let slot = &mut rows[l.gen][at];
                    *slot = p.sub(*slot, 1);
                } else {
                    let slot = &mut rows[l.gen][at];
                    *slot = p.add(*slot, 1);
                    at = t.mul(at, g);
                }
            }
            rows
        })
        .collect()
}

pub fn build_cover(pres: &Presentation, hom: &Homomorphism, p: Prime) -> Result<CoverComplex> {
    if hom.source() != pres {
        return Err(Error::Inconsistent("homomorphism is defined on a different presentation".into()));
    }
    let t = hom.target().clone();
    let size = t.size();
    let n = pres.n_generators();
    let m = pres.relators().len();
    check_cap("cover boundary matrix", (size as u128 * m as u128) * (size as u128 * n as u128))?;
    check_cap("cover boundary matrix", (size as u128 * n as u128) * size as u128)?;

    let mut blocks = Vec::with_capacity(m);
    for rows in seed_rows(pres, hom, p) {
        let row = rows
            .into_iter()
            .map(|coeffs| GroupRingElement::from_coeffs(&t, p, coeffs).map(|seed| EquivariantBlock { seed }))
            .collect::<Result<Vec<_>>>()?;
        blocks.push(row);
    }

    let mut d1 = FpMatrix::zeros(size * n, size, p)?;
    for j in 0..n {
        let a = hom.images()[j];
        for g in 0..size {
            let end = t.mul(g, a);
            if end != g {
                d1.set(j * size + g, end, 1);
                d1.set(j * size + g, g, p.neg(1));
            }
        }
    }

    let mut cover = CoverComplex {
        hom: hom.clone(),
        p,
        blocks,
        d1,
        rank_d1: 0,
        rank_d2: 0,
        b0: 0,
        b1: 0,
        b2: 0,
        hrk: 0,
        euler: 0,
    };
    let rank_d1 = cover.d1.rank();
    let rank_d2 = cover.d2()?.rank();
    cover.rank_d1 = rank_d1;
    cover.rank_d2 = rank_d2;
    cover.b0 = size - rank_d1;
    cover.b1 = size * n - rank_d2 - rank_d1;
    cover.b2 = size * m - rank_d2;
    cover.hrk = cover.b0 + cover.b1 + cover.b2;
    cover.euler = cover.b0 as i64 - cover.b1 as i64 + cover.b2 as i64;
    Ok(cover)
}

/// `pattern[i][j]` is true when `B_ij` is balanced.
pub fn check_balance_pattern(c: &CoverComplex) -> Vec<Vec<bool>> {
    c.blocks
        .iter()
        .map(|row| row.iter().map(EquivariantBlock::is_balanced).collect())
        .collect()
}

/// Equality cases of `hrk(X; F_p) >= 2^r` for a connected cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HcCase {
    /// `r = 1`, `K` and `X` both have the homology of `S¹`.
    A,
    /// `r = 1`, `p = 2`, `K ~ RP²` and `X ~ S²` in homology.
    B,
    /// `r = 2`, `K` and `X` both have the homology of the torus.
    C,
    /// Equality for a disconnected cover; the connected classification does
    /// not apply.
    Disconnected,
    /// Connected equality case matching none of the above.
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcVerdict {
    pub p: u32,
    pub r: usize,
    pub hrk: usize,
    pub lower_bound: u64,
    pub holds: bool,
    pub equality: bool,
    pub connected: bool,
    pub base_betti: [usize; 3],
    pub cover_betti: [usize; 3],
    pub case: Option<HcCase>,
}

impl HcVerdict {
    /// Whether this instance contradicts the inequality or its equality
    /// classification.
    pub fn falsifies(&self) -> bool {
        !self.holds || self.case == Some(HcCase::Unclassified)
    }
}

/// The profile tables, keyed by case.
pub fn hc_equality_profiles(p: u32, r: usize) -> Vec<(HcCase, [usize; 3], [usize; 3])> {
    let mut out = Vec::new();
    if r == 1 {
        out.push((HcCase::A, [1, 1, 0], [1, 1, 0]));
        if p == 2 {
            out.push((HcCase::B, [1, 1, 1], [1, 0, 1]));
        }
    }
    if r == 2 {
        out.push((HcCase::C, [1, 2, 1], [1, 2, 1]));
    }
    out
}

pub fn hc_verdict(c: &CoverComplex) -> Result<HcVerdict> {
    let p = c.p;
    let target = c.hom.target();
    let r = target
        .elementary_abelian_rank(p)
        .ok_or_else(|| Error::NotElementaryAbelian(target.label().to_string()))?;
    let base = complex_summary(c.hom.source(), p)?;
    let base_betti = [base.b0, base.b1, base.b2];
    let lower_bound = 1u64 << r;
    let holds = c.hrk as u64 >= lower_bound;
    let equality = c.hrk as u64 == lower_bound;
    let connected = c.b0 == 1;
    let case = if !equality {
        None
    } else if !connected {
        Some(HcCase::Disconnected)
    } else {
        let hits: Vec<HcCase> = hc_equality_profiles(p.get(), r)
            .into_iter()
            .filter(|(_, k, x)| *k == base_betti && *x == c.betti())
            .map(|(case, _, _)| case)
            .collect();
        Some(if hits.len() == 1 { hits[0] } else { HcCase::Unclassified })
    };
    Ok(HcVerdict {
        p: p.get(),
        r,
        hrk: c.hrk,
        lower_bound,
        holds,
        equality,
        connected,
        base_betti,
        cover_betti: c.betti(),
        case,
    })
}
