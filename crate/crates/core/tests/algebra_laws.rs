use g3bell::ga::{blade_product, Blade, DIM};
use g3bell::{cross, gp, grade_audit, grade_project, wedge, Multivector, UnitVector3, Vector3};
use proptest::prelude::*;

mod common;
use common::oracle_product;

#[test]
fn cayley_table_matches_oracle_on_all_pairs() {
    for i in 0..DIM {
        for j in 0..DIM {
            let (sign, k) = oracle_product(i, j);
            let mut expected = [0.0; DIM];
            expected[k] = sign;
            let got = gp(
                &Multivector::basis(Blade::ALL[i]),
                &Multivector::basis(Blade::ALL[j]),
            );
            assert_eq!(*got.coeffs(), expected, "blade {i} * blade {j}");
            assert_eq!(
                blade_product(Blade::ALL[i], Blade::ALL[j]),
                (sign, Blade::ALL[k])
            );
        }
    }
}

#[test]
fn oracle_examples() {
    // I I = -1, I e1 = e23, e1 e2 = e12
    assert_eq!(oracle_product(7, 7), (-1.0, 0));
    assert_eq!(oracle_product(7, 1), (1.0, 6));
    assert_eq!(oracle_product(1, 2), (1.0, 4));
    assert_eq!(oracle_product(6, 5), (1.0, 4));
}

fn mv() -> impl Strategy<Value = Multivector> {
    prop::array::uniform8(-1.0f64..1.0).prop_map(Multivector::from_coeffs)
}

fn vec3() -> impl Strategy<Value = Vector3> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0).prop_map(|(x, y, z)| Vector3::new(x, y, z))
}

fn close(x: &Multivector, y: &Multivector, tol: f64) -> bool {
    x.approx_eq(y, tol)
}

proptest! {
    #[test]
    fn associativity(x in mv(), y in mv(), z in mv()) {
        let l = gp(&gp(&x, &y), &z);
        let r = gp(&x, &gp(&y, &z));
        prop_assert!(close(&l, &r, 1e-12), "{l} vs {r}");
    }

    #[test]
    fn distributivity(x in mv(), y in mv(), z in mv()) {
        prop_assert!(close(&gp(&x, &(y + z)), &(gp(&x, &y) + gp(&x, &z)), 1e-12));
        prop_assert!(close(&gp(&(x + y), &z), &(gp(&x, &z) + gp(&y, &z)), 1e-12));
    }

    #[test]
    fn homogeneity(x in mv(), y in mv(), s in -3.0f64..3.0) {
        prop_assert!(close(&gp(&(x * s), &y), &(gp(&x, &y) * s), 1e-12));
        prop_assert!(close(&gp(&x, &(y * s)), &(gp(&x, &y) * s), 1e-12));
    }

    #[test]
    fn pseudoscalar_is_central(x in mv()) {
        prop_assert_eq!(gp(&Multivector::I, &x), gp(&x, &Multivector::I));
    }

    #[test]
    fn projections_sum_to_whole(x in mv()) {
        let sum: Multivector = (0..4).map(|k| grade_project(&x, k).unwrap()).sum();
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn grade_closure_under_addition(x in mv(), y in mv(), k in 0usize..4) {
        let s = grade_project(&x, k).unwrap() + grade_project(&y, k).unwrap();
        prop_assert!(grade_audit(&s, 1e-12).unwrap().is_subset_of(&[k]));
    }

    #[test]
    fn duality_of_cross_and_wedge(a in vec3(), b in vec3()) {
        prop_assert_eq!(gp(&Multivector::I, &cross(&a, &b).to_multivector()), wedge(&a, &b));
    }

    #[test]
    fn wedge_is_product_minus_dot(a in vec3(), b in vec3()) {
        let via_gp = gp(&a.to_multivector(), &b.to_multivector()) - Multivector::scalar(a.dot(&b));
        prop_assert!(close(&via_gp, &wedge(&a, &b), 1e-15));
        prop_assert_eq!(wedge(&a, &b), -wedge(&b, &a));
        prop_assert!(grade_audit(&wedge(&a, &b), 1e-15).unwrap().is_subset_of(&[2]));
    }

    #[test]
    fn unit_normalization_round_trips(v in vec3()) {
        prop_assume!(v.norm() > 1e-3);
        let u = UnitVector3::normalize(v).unwrap();
        prop_assert!(UnitVector3::new(*u).is_ok());
    }
}

#[test]
fn pseudoscalar_squares_to_minus_one() {
    assert_eq!(
        gp(&Multivector::I, &Multivector::I),
        Multivector::scalar(-1.0)
    );
}
