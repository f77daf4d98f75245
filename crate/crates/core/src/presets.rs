//! Small named algebras used throughout the test suite and docs.

use std::sync::Arc;

use crate::algebra::{build, Algebra};
use crate::field::FieldSpec;
use crate::quiver::{AlgebraPresentation, Quiver};

/// Path algebra of the linear quiver `1 -> 2 -> ... -> n` (arrows `a1..`).
pub fn linear_quiver(n: usize, field: FieldSpec) -> Arc<Algebra> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    build(AlgebraPresentation::new(q, field)).unwrap()
}

/// `A3`: the path algebra of `1 -> 2 -> 3` with arrows named `a`, `b`.
pub fn a3(field: FieldSpec) -> Arc<Algebra> {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
        ],
    )
    .unwrap();
    build(AlgebraPresentation::new(q, field)).unwrap()
}

/// Cyclic Nakayama algebra on `n` vertices with all paths of length
/// `loewy_len` equal to zero. Arrows `x1: 1 -> 2, ..., xn: n -> 1`.
pub fn cyclic_nakayama(n: usize, loewy_len: usize, field: FieldSpec) -> Arc<Algebra> {
    assert!(n >= 1 && loewy_len >= 2);
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| {
            let s = i.to_string();
            let t = (i % n + 1).to_string();
            (format!("x{i}"), s, t)
        })
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    let mut pres = AlgebraPresentation::new(q, field);
    // one zero relation per starting vertex: the unique path of length loewy_len
    for start in 0..n {
        let word: Vec<String> = (0..loewy_len).map(|k| format!("x{}", (start + k) % n + 1)).collect();
        let word_refs: Vec<&str> = word.iter().map(|s| s.as_str()).collect();
        pres.add_zero_relation(word_refs).unwrap();
    }
    build(pres).unwrap()
}

/// `N3`: cyclic quiver on three vertices with relations
/// `x1x2x3x1 = x2x3x1x2 = x3x1x2x3 = 0` (dimension 12, symmetric).
pub fn n3(field: FieldSpec) -> Arc<Algebra> {
    cyclic_nakayama(3, 4, field)
}

/// `K2`: quiver `1 <=> 2` with `aba = bab = 0` (dimension 6, symmetric).
pub fn k2(field: FieldSpec) -> Arc<Algebra> {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "1".into()),
        ],
    )
    .unwrap();
    let mut pres = AlgebraPresentation::new(q, field);
    pres.add_zero_relation(vec!["a", "b", "a"]).unwrap();
    pres.add_zero_relation(vec!["b", "a", "b"]).unwrap();
    build(pres).unwrap()
}

/// `SN22`: cyclic quiver `1 <=> 2` with all length-two paths zero
/// (dimension 4, self-injective, not symmetric).
pub fn sn22(field: FieldSpec) -> Arc<Algebra> {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "1".into()),
        ],
    )
    .unwrap();
    let mut pres = AlgebraPresentation::new(q, field);
    pres.add_zero_relation(vec!["a", "b"]).unwrap();
    pres.add_zero_relation(vec!["b", "a"]).unwrap();
    build(pres).unwrap()
}

/// Kronecker algebra: two arrows `a, b: 1 -> 2`, no relations
/// (representation-infinite).
pub fn kronecker(field: FieldSpec) -> Arc<Algebra> {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "1".into(), "2".into()),
        ],
    )
    .unwrap();
    build(AlgebraPresentation::new(q, field)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_dimensions() {
        let f = FieldSpec::Rationals;
        assert_eq!(a3(f).dim(), 6);
        assert_eq!(n3(f).dim(), 12);
        assert_eq!(k2(f).dim(), 6);
        assert_eq!(sn22(f).dim(), 4);
        assert_eq!(kronecker(f).dim(), 4);
    }
}

use crate::complex::{direct_sum_complexes, ProjComplex};
use crate::quiver::{ArrowId, Path, VertexId};

fn el_of(alg: &Arc<Algebra>, source: usize, arrows: &[usize]) -> crate::algebra::El {
    alg.reduce_path(&Path {
        source: VertexId(source),
        arrows: arrows.iter().map(|&a| ArrowId(a)).collect(),
    })
}

/// Over `n3`: the three-term tilting complex
/// `(P_2 -x2x3x1-> P_2 -x1-> P_1) ⊕ P_2 ⊕ (P_2 -x3x1-> P_3)` in degrees
/// 0..2.
pub fn n3_three_term_tilting(alg: &Arc<Algebra>) -> ProjComplex {
    let long = ProjComplex::from_parts(
        alg,
        0,
        vec![vec![VertexId(1)], vec![VertexId(1)], vec![VertexId(0)]],
        vec![
            vec![vec![el_of(alg, 1, &[1, 2, 0])]],
            vec![vec![el_of(alg, 0, &[0])]],
        ],
    )
    .unwrap();
    let stalk = ProjComplex::stalk(alg, &[VertexId(1)], 0);
    let third = ProjComplex::from_parts(
        alg,
        0,
        vec![vec![VertexId(1)], vec![VertexId(2)]],
        vec![vec![vec![el_of(alg, 2, &[2, 0])]]],
    )
    .unwrap();
    direct_sum_complexes(&[long, stalk, third])
}

/// Over `n3`: the two-term tilting complex
/// `(P_2 -x1-> P_1) ⊕ P_2 ⊕ (P_2 -x3x1-> P_3)` in degrees 0..1.
pub fn n3_two_term_tilting(alg: &Arc<Algebra>) -> ProjComplex {
    let first = ProjComplex::from_parts(
        alg,
        0,
        vec![vec![VertexId(1)], vec![VertexId(0)]],
        vec![vec![vec![el_of(alg, 0, &[0])]]],
    )
    .unwrap();
    let stalk = ProjComplex::stalk(alg, &[VertexId(1)], 0);
    let third = ProjComplex::from_parts(
        alg,
        0,
        vec![vec![VertexId(1)], vec![VertexId(2)]],
        vec![vec![vec![el_of(alg, 2, &[2, 0])]]],
    )
    .unwrap();
    direct_sum_complexes(&[first, stalk, third])
}
