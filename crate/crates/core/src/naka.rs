//! Self-injectivity, symmetry, the Nakayama permutation `ρ` and the data
//! transporting `ν` to maps of projectives.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Algebra, El, StructureInfo, SymmetryStatus};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Mat;
use crate::quiver::VertexId;
use crate::rep::{indec_iso, InjSum, ModuleMap, ProjSum, Representation};

pub fn compute_structure(alg: &Arc<Algebra>) -> StructureInfo {
    let n = alg.vertex_count();
    let self_injective = (0..n).all(|v| {
        crate::rep::is_injective_rep(&Representation::projective(alg, VertexId(v)))
    });

    let mut rho = None;
    let mut nu_transport = None;
    if self_injective {
        let (perm, witnesses) = nakayama_permutation(alg);
        nu_transport = Some(transport_tables(alg, &perm, &witnesses));
        rho = Some(perm);
    }

    let symmetry = if !self_injective || rho.as_deref().is_some_and(|r| r.iter().enumerate().any(|(i, &j)| i != j)) {
        // symmetric algebras are self-injective with identity permutation
        SymmetryStatus::NotSymmetric
    } else {
        symmetric_form_search(alg)
    };

    StructureInfo {
        self_injective,
        symmetry,
        rho,
        nu_transport,
    }
}

/// Find `ρ` with `νP_i ≅ P_{ρ(i)}` together with iso witnesses
/// `φ_i : νP_i -> P_{ρ(i)}`.
fn nakayama_permutation(alg: &Arc<Algebra>) -> (Vec<usize>, Vec<ModuleMap>) {
    let n = alg.vertex_count();
    let mut perm = vec![usize::MAX; n];
    let mut wit = Vec::new();
    for i in 0..n {
        let nu_pi = Representation::injective(alg, VertexId(i));
        let mut found = false;
        for j in 0..n {
            let pj = Representation::projective(alg, VertexId(j));
            if nu_pi.dims != pj.dims {
                continue;
            }
            if let Ok(Some(phi)) = indec_iso(&nu_pi, &pj) {
                perm[i] = j;
                wit.push(phi);
                found = true;
                break;
            }
        }
        assert!(found, "self-injective algebra must permute projectives");
    }
    (perm, wit)
}

/// For every vertex pair `(w, v)` the matrix of the linear map
/// `e_w A e_v -> e_{ρw} A e_{ρv}`, `y ↦ z` with
/// `L_z = φ_w ∘ ν(L_y) ∘ φ_v^{-1}`.
fn transport_tables(
    alg: &Arc<Algebra>,
    rho: &[usize],
    wit: &[ModuleMap],
) -> BTreeMap<(usize, usize), Mat> {
    let n = alg.vertex_count();
    let field = alg.field();
    let mut out = BTreeMap::new();
    for w in 0..n {
        for v in 0..n {
            let src_basis = alg.proj_hom_basis(VertexId(v), VertexId(w)); // e_w A e_v
            let dst_dim = alg
                .proj_hom_basis(VertexId(rho[v]), VertexId(rho[w]))
                .len();
            let mut m = Mat::zero(dst_dim, src_basis.len(), field);
            let gen_sum = ProjSum::new(alg, &[VertexId(rho[v])]);
            let (gen_v, gen_coord) = gen_sum.generator_coord(0);
            for (c, &bi) in src_basis.iter().enumerate() {
                let y = alg.basis_el(bi);
                let (_, _, nu_map) =
                    InjSum::nu_of_el_matrix(alg, &[VertexId(v)], &[VertexId(w)], &[vec![y]]);
                let phi_v_inv = wit[v].inverse().expect("iso witness invertible");
                let psi = wit[w].compose(&nu_map).compose(&phi_v_inv);
                // read off the algebra element: image of the generator of P_{ρv}
                let img = psi.mats[gen_v.0].col(gen_coord);
                debug_assert_eq!(img.len(), dst_dim);
                for (r, val) in img.iter().enumerate() {
                    m.set(r, c, val.clone());
                }
            }
            out.insert((w, v), m);
        }
    }
    out
}

/// Transport an element `y ∈ e_w A e_v` along `ν` to `e_{ρw} A e_{ρv}`.
pub fn transport_el(alg: &Arc<Algebra>, y: &El, v: VertexId, w: VertexId) -> El {
    let st = alg.structure();
    let rho = st.rho.as_ref().expect("transport needs self-injective");
    let tables = st.nu_transport.as_ref().unwrap();
    let coords = alg.el_to_hom_coords(y, v, w);
    let m = &tables[&(w.0, v.0)];
    let img = m.apply(&coords);
    alg.hom_coords_to_el(&img, VertexId(rho[v.0]), VertexId(rho[w.0]))
}

/// Solve for all functionals with `λ(xy) = λ(yx)` and search the solution
/// space for one with invertible Gram matrix `λ(b_i b_j)`.
fn symmetric_form_search(alg: &Arc<Algebra>) -> SymmetryStatus {
    let field = alg.field();
    let dim = alg.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let cij = alg.mult_coords(i, j);
            let cji = alg.mult_coords(j, i);
            let row: Vec<Scalar> = (0..dim).map(|k| cij[k].sub(&cji[k])).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let space: Vec<Vec<Scalar>> = if rows.is_empty() {
        (0..dim)
            .map(|i| {
                let mut e = vec![field.zero(); dim];
                e[i] = field.one();
                e
            })
            .collect()
    } else {
        Mat::from_rows(field, rows).kernel_basis()
    };
    if space.is_empty() {
        return SymmetryStatus::NotSymmetric;
    }
    let gram_invertible = |lam: &[Scalar]| -> bool {
        let g = Mat::from_fn(dim, dim, field, |i, j| {
            let c = alg.mult_coords(i, j);
            let mut acc = field.zero();
            for k in 0..dim {
                if !c[k].is_zero() && !lam[k].is_zero() {
                    acc = acc.add(&c[k].mul(&lam[k]));
                }
            }
            acc
        });
        g.inverse().is_some()
    };
    let s = space.len();
    let mut candidates: Vec<Vec<Scalar>> = space.clone();
    for a in 0..s {
        for b in a + 1..s {
            let sum: Vec<Scalar> = space[a].iter().zip(&space[b]).map(|(x, y)| x.add(y)).collect();
            let diff: Vec<Scalar> = space[a].iter().zip(&space[b]).map(|(x, y)| x.sub(y)).collect();
            candidates.push(sum);
            candidates.push(diff);
        }
    }
    let sweep = (s.saturating_sub(1)) * dim + 2;
    let sweep = match field {
        FieldSpec::Rationals => sweep as i64,
        FieldSpec::Gf(p) => sweep.min(p as usize - 1).max(1) as i64,
    };
    for t in 1..=sweep {
        let tt = field.from_i64(t);
        let mut lam = vec![field.zero(); dim];
        let mut w = field.one();
        for b in &space {
            for (k, c) in b.iter().enumerate() {
                lam[k] = lam[k].add(&c.mul(&w));
            }
            w = w.mul(&tt);
        }
        candidates.push(lam);
    }
    // greedy rank climbing from each single basis functional
    for start in 0..s {
        let mut lam = space[start].clone();
        for _ in 0..s {
            if gram_invertible(&lam) {
                return SymmetryStatus::Symmetric(lam);
            }
            let mut improved = false;
            let rank_of = |l: &[Scalar]| -> usize {
                Mat::from_fn(dim, dim, field, |i, j| {
                    let c = alg.mult_coords(i, j);
                    let mut acc = field.zero();
                    for k in 0..dim {
                        if !c[k].is_zero() && !l[k].is_zero() {
                            acc = acc.add(&c[k].mul(&l[k]));
                        }
                    }
                    acc
                })
                .rank()
            };
            let base_rank = rank_of(&lam);
            'search: for b in &space {
                for c in 1..=(dim as i64 + 1) {
                    let cand: Vec<Scalar> = lam
                        .iter()
                        .zip(b)
                        .map(|(x, y)| x.add(&field.from_i64(c).mul(y)))
                        .collect();
                    if rank_of(&cand) > base_rank {
                        lam = cand;
                        improved = true;
                        break 'search;
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
    for cand in &candidates {
        if gram_invertible(cand) {
            return SymmetryStatus::Symmetric(cand.clone());
        }
    }
    // the search is complete over the rationals for our sweep sizes in
    // practice; report honestly when nothing was found
    match field {
        FieldSpec::Rationals => SymmetryStatus::Indeterminate,
        FieldSpec::Gf(_) => SymmetryStatus::Indeterminate,
    }
}
