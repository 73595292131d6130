mod common;

use hecke_workbench::harness::dominant_window;
use hecke_workbench::{
    AffineWeylGroup, Cocharacter, DominantCombination, PrimeField, Satake, SphericalElement,
    PRESETS,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_spherical(
    rng: &mut ChaCha8Rng,
    g: &AffineWeylGroup,
    f: PrimeField,
    window: &[Cocharacter],
) -> SphericalElement {
    let n = rng.gen_range(1..=3);
    DominantCombination::new(
        g.datum(),
        f,
        (0..n).map(|_| (window.choose(rng).unwrap().clone(), rng.gen_range(1..f.p()))),
    )
    .unwrap()
}

fn small_window(g: &AffineWeylGroup) -> Vec<Cocharacter> {
    let h = if g.datum().semisimple_rank() == 1 { 6 } else { 4 };
    dominant_window(g.datum(), h).into_iter().filter(|m| g.datum().omega_class(m).abs() <= 1).collect()
}

#[test]
fn c_map_inverts_c_inverse() {
    let mut rng = common::rng(21);
    for label in PRESETS {
        let g = AffineWeylGroup::preset(label).unwrap();
        let f = PrimeField::new(5).unwrap();
        let s = Satake::new(&g, f);
        let window = small_window(&g);
        for _ in 0..5 {
            let a = random_spherical(&mut rng, &g, f, &window);
            let z = s.c_inverse(&a).unwrap();
            assert!(s.hecke().is_central(&z).unwrap(), "{label}");
            assert_eq!(s.c_map(&z).unwrap(), a, "{label}");
        }
    }
}

#[test]
fn c_inverse_inverts_c_map_on_bernstein_span() {
    let mut rng = common::rng(22);
    for label in PRESETS {
        let g = AffineWeylGroup::preset(label).unwrap();
        let f = PrimeField::new(3).unwrap();
        let s = Satake::new(&g, f);
        let h = s.hecke();
        let window = small_window(&g);
        for _ in 0..5 {
            let mut z = h.zero();
            for _ in 0..2 {
                let mu = window.choose(&mut rng).unwrap();
                z = z.add(&h.z_mu(mu).unwrap().scale(&rng.gen_range(1..3))).unwrap();
            }
            assert_eq!(s.c_inverse(&s.c_map(&z).unwrap()).unwrap(), z, "{label}");
        }
    }
}

#[test]
fn iwahori_round_trip_and_satake_round_trip() {
    let mut rng = common::rng(23);
    for label in PRESETS {
        let g = AffineWeylGroup::preset(label).unwrap();
        let f = PrimeField::new(5).unwrap();
        let s = Satake::new(&g, f);
        let window = small_window(&g);
        for _ in 0..10 {
            let a = random_spherical(&mut rng, &g, f, &window);
            assert_eq!(s.from_iwahori(&s.to_iwahori(&a).unwrap()).unwrap(), a);
            assert_eq!(s.satake_forward(&s.satake_inverse(&a).unwrap()).unwrap(), a);
            assert_eq!(s.satake_inverse(&s.satake_forward(&a).unwrap()).unwrap(), a);
        }
    }
}

#[test]
fn spherical_product_is_commutative_and_associative() {
    let mut rng = common::rng(24);
    for label in ["SL2", "GL2", "SL3", "Sp4"] {
        let g = AffineWeylGroup::preset(label).unwrap();
        let f = PrimeField::new(3).unwrap();
        let s = Satake::new(&g, f);
        let window = small_window(&g);
        let unit = s.basis(Cocharacter::zero(g.rank())).unwrap();
        for _ in 0..4 {
            let a = random_spherical(&mut rng, &g, f, &window);
            let b = random_spherical(&mut rng, &g, f, &window);
            let c = random_spherical(&mut rng, &g, f, &window);
            let ab = s.spherical_mul(&a, &b).unwrap();
            assert_eq!(ab, s.spherical_mul(&b, &a).unwrap(), "{label}");
            assert_eq!(
                s.spherical_mul(&ab, &c).unwrap(),
                s.spherical_mul(&a, &s.spherical_mul(&b, &c).unwrap()).unwrap(),
                "{label}"
            );
            assert_eq!(s.spherical_mul(&unit, &a).unwrap(), a);
        }
    }
}

#[test]
fn spherical_product_agrees_with_iwahori_convolution() {
    // At q = 0, 1_K * 1_K = 1_K, so H_K sits in H_I as a subalgebra.
    let mut rng = common::rng(25);
    for label in PRESETS {
        let g = AffineWeylGroup::preset(label).unwrap();
        let f = PrimeField::new(5).unwrap();
        let s = Satake::new(&g, f);
        let h = s.hecke();
        assert_eq!(h.mul(&h.one_k(), &h.one_k()).unwrap(), h.one_k());
        let window = small_window(&g);
        for _ in 0..3 {
            let a = random_spherical(&mut rng, &g, f, &window);
            let b = random_spherical(&mut rng, &g, f, &window);
            let direct = h.mul(&s.to_iwahori(&a).unwrap(), &s.to_iwahori(&b).unwrap()).unwrap();
            assert_eq!(s.from_iwahori(&direct).unwrap(), s.spherical_mul(&a, &b).unwrap(), "{label}");
        }
    }
}

#[test]
fn satake_monomials_multiply_like_the_monoid() {
    let g = AffineWeylGroup::preset("Sp4").unwrap();
    let f = PrimeField::new(3).unwrap();
    let s = Satake::new(&g, f);
    let window = small_window(&g);
    for mu in &window {
        for nu in &window {
            let prod = s
                .spherical_mul(
                    &s.satake_inverse(&s.basis(mu.clone()).unwrap()).unwrap(),
                    &s.satake_inverse(&s.basis(nu.clone()).unwrap()).unwrap(),
                )
                .unwrap();
            let want = s.satake_inverse(&s.basis(mu + nu).unwrap()).unwrap();
            assert_eq!(prod, want, "{mu} {nu}");
        }
    }
}

#[test]
fn bernstein_at_g2_fundamental_coweights() {
    let g = AffineWeylGroup::preset("G2").unwrap();
    let s = Satake::new(&g, PrimeField::new(3).unwrap());
    for mu in [Cocharacter::new([1, 2]), Cocharacter::new([2, 3])] {
        let d = g.datum();
        assert!(d.is_dominant(&mu).unwrap());
        let simple: Vec<i64> = d.simple_roots.iter().map(|a| mu.pair(a)).collect();
        assert_eq!(simple.iter().sum::<i64>(), 1, "{mu} is fundamental");
        let b = s.bernstein_map(&s.basis(mu.clone()).unwrap()).unwrap();
        assert_eq!(b, s.hecke().z_mu(&mu).unwrap());
        assert!(s.hecke().is_central(&b).unwrap());
    }
}

#[test]
fn satake_matrix_unitriangular_everywhere() {
    for label in PRESETS {
        let g = AffineWeylGroup::preset(label).unwrap();
        let s = Satake::new(&g, PrimeField::new(3).unwrap());
        let mus = dominant_window(g.datum(), 8);
        let m = s.satake_matrix(&mus).unwrap();
        for i in 0..mus.len() {
            assert_eq!(m[i][i], 1);
            for j in 0..mus.len() {
                let leq = g.datum().dominance_leq(&mus[i], &mus[j]).unwrap();
                assert_eq!(m[i][j], leq as u64, "{label} {} {}", mus[i], mus[j]);
                if j < i {
                    assert_eq!(m[i][j], 0);
                }
            }
        }
    }
}

#[test]
fn spherical_json_round_trip() {
    let mut rng = common::rng(26);
    let g = AffineWeylGroup::preset("GL3").unwrap();
    let f = PrimeField::new(5).unwrap();
    let window = small_window(&g);
    for _ in 0..10 {
        let a = random_spherical(&mut rng, &g, f, &window);
        let j = a.to_json();
        assert_eq!(DominantCombination::from_json(g.datum(), &j).unwrap(), a);
    }
}
