//! Property-based invariants: exact linear algebra identities, polynomial
//! factorization round-trips, basis-change invariants on randomized
//! algebras, hom-space duality, and serialization round-trips.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use repalg::fmt::{
    algebra_from_doc, algebra_to_doc, from_json, module_from_doc, module_to_doc, to_json, Document,
};
use repalg::linalg::Matrix;
use repalg::module::{dual_module, hom_space, regular_module};
use repalg::oracle::{random_algebra, random_module, scramble, seed_family};
use repalg::poly::{factor_poly, Poly};

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3u32), Just(5u32)]
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (prime(), 1usize..=6, 1usize..=6).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0u32..p, r * c)
            .prop_map(move |data| Matrix::from_flat(r, c, data, p))
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    (prime(), 1usize..=8).prop_flat_map(|(p, deg)| {
        prop::collection::vec(0u32..p, deg + 1).prop_map(move |coeffs| Poly::new(p, coeffs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.rank, r.rank);
        prop_assert_eq!(again.pivots, r.pivots);
    }

    #[test]
    fn rank_plus_nullity_is_column_count(m in matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols);
    }

    #[test]
    fn transpose_is_an_involution_and_preserves_rank(m in matrix()) {
        prop_assert_eq!(&m.transpose().transpose(), &m);
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn factorization_multiplies_back(f in poly()) {
        prop_assume!(!f.is_zero());
        let (lead, factors) = factor_poly(&f).unwrap();
        let mut prod = Poly::constant(f.p, lead);
        for (g, e) in &factors {
            prop_assert_eq!(g.leading(), 1);
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn opposite_is_an_involution(seed in any::<u64>(), p in prime()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_algebra(&mut rng, p);
        prop_assert_eq!(alg.opposite().opposite(), alg);
    }

    #[test]
    fn radical_dimension_is_basis_change_invariant(
        seed in any::<u64>(),
        p in prime(),
        idx in 0usize..15,
    ) {
        let family = seed_family(p);
        let alg = &family[idx % family.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let twisted = scramble(alg, &mut rng);
        prop_assert!(twisted.validate().is_ok());
        prop_assert_eq!(twisted.radical().dim(), alg.radical().dim());
    }

    #[test]
    fn hom_spaces_are_dual_symmetric(seed in any::<u64>(), p in prime()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_algebra(&mut rng, p);
        let m = regular_module(&alg);
        let n = random_module(&alg, &mut rng, 5).unwrap();
        let forward = hom_space(&alg, &m, &n).unwrap().len();
        let op = alg.opposite();
        let backward = hom_space(&op, &dual_module(&n), &dual_module(&m)).unwrap().len();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn algebra_document_round_trips(seed in any::<u64>(), p in prime()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_algebra(&mut rng, p);
        let text = to_json(&Document::Algebra(algebra_to_doc(&alg)));
        let Document::Algebra(doc) = from_json(&text).unwrap() else {
            return Err(TestCaseError::fail("wrong document kind"));
        };
        prop_assert_eq!(algebra_from_doc(&doc).unwrap(), alg);
    }

    #[test]
    fn module_document_round_trips(seed in any::<u64>(), p in prime()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_algebra(&mut rng, p);
        let m = random_module(&alg, &mut rng, 6).unwrap();
        let text = to_json(&Document::Module(module_to_doc(&m)));
        let Document::Module(doc) = from_json(&text).unwrap() else {
            return Err(TestCaseError::fail("wrong document kind"));
        };
        prop_assert_eq!(module_from_doc(&alg, &doc).unwrap(), m);
    }
}
