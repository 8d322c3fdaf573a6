use proptest::prelude::*;
use radii_atlas::diagram::{check_2d_projection, eval_slacks, f_map, w_envelopes, DiagramPoint};
use radii_atlas::geometry::{combination, ArcPolygon, Point};
use radii_atlas::radii::compute_radii;
use radii_atlas::random::{random_body, BodyKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn body(seed: u64, kind: usize) -> ArcPolygon {
    random_body(&mut ChaCha8Rng::seed_from_u64(seed), BodyKind::ALL[kind % BodyKind::ALL.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_bodies_satisfy_all_inequalities(seed in any::<u64>(), kind in 0usize..4) {
        let k = body(seed, kind);
        let [r, w, d, big_r] = compute_radii(&k).unwrap().radii.values();
        let s = eval_slacks(r, w, d, big_r).slacks;
        prop_assert!(s.min() >= -1e-9, "{:?}", s);
        for p in check_2d_projection(r, d, big_r) {
            prop_assert!(p >= -1e-7);
        }
    }

    #[test]
    fn radii_scale_and_translate(seed in any::<u64>(), kind in 0usize..4, s in 0.2f64..5.0, dx in -3.0f64..3.0) {
        let k = body(seed, kind);
        let moved = k.scale(s, Point::ORIGIN).unwrap().translate(Point::new(dx, -dx)).unwrap();
        let a = compute_radii(&k).unwrap().radii.values();
        let b = compute_radii(&moved).unwrap().radii.values();
        for (x, y) in a.iter().zip(b) {
            prop_assert!((x * s - y).abs() <= 1e-8 * s.max(1.0), "{x} * {s} vs {y}");
        }
    }

    #[test]
    fn blending_with_the_ball_moves_along_a_segment(seed in any::<u64>(), kind in 0usize..4, lambda in 0.05f64..0.95) {
        let k = body(seed, kind);
        let t = compute_radii(&k).unwrap().radii;
        let k0 = k.translate(t.circumcenter * -1.0).unwrap().scale(1.0 / t.circumradius, Point::ORIGIN).unwrap();
        let ball = ArcPolygon::disk(Point::ORIGIN, 1.0);
        let p0 = f_map(&k0).unwrap();
        let p = f_map(&combination(&k0, 1.0 - lambda, &ball, lambda).unwrap()).unwrap();
        prop_assert!(p.dist_inf(&p0.lerp(&DiagramPoint::BALL, lambda)) <= 1e-6);
    }

    #[test]
    fn width_envelopes_are_ordered(x in 0.0f64..1.0, z in 0.0f64..1.0) {
        let d = 3f64.sqrt() + (2.0 - 3f64.sqrt()) * z;
        let s = (4.0 - d * d).max(0.0).sqrt();
        let r_lo = d * d * s / (2.0 * (2.0 + s));
        let r_hi = d - 1.0;
        prop_assume!(r_hi > r_lo);
        let r = r_lo + (r_hi - r_lo) * x;
        if let Ok((lo, hi)) = w_envelopes(r, d, 1.0) {
            prop_assert!(lo <= hi + 1e-12, "r={r} D={d}: {lo} > {hi}");
        }
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), kind in 0usize..4) {
        let k = body(seed, kind);
        let back = ArcPolygon::from_json(&k.to_json()).unwrap();
        let a = compute_radii(&k).unwrap().radii.values();
        let b = compute_radii(&back).unwrap().radii.values();
        for (x, y) in a.iter().zip(b) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }
}
