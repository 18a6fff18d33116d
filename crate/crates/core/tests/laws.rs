use kcascade::*;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| {
        &Scalar::ratio(a, b) + &(&Scalar::ratio(c, d) * &Scalar::sqrt2())
    })
}

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1u32..5).prop_map(|n| RootSystem::new(TypeLabel::A, n).unwrap()),
        (1u32..4).prop_map(|n| RootSystem::new(TypeLabel::B, n).unwrap()),
        (1u32..4).prop_map(|n| RootSystem::new(TypeLabel::C, n).unwrap()),
        (2u32..5).prop_map(|n| RootSystem::new(TypeLabel::D, n).unwrap()),
    ]
}

/// A short random word in the root vectors of `sys`, as an element of U(n).
fn element(u: &Uea, picks: &[usize], coeff: i64) -> Element {
    let sys = u.system().unwrap();
    let gens: Vec<Element> = picks.iter().map(|&k| u.root(&sys.root(k % sys.len()))).collect();
    u.product(&gens).scale(&Scalar::from(coeff))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if let Some(i) = x.inv() {
            prop_assert!((&x * &i).is_one());
        } else {
            prop_assert!(x.is_zero());
        }
        let s = x.to_string();
        prop_assert_eq!(Scalar::parse(&s).unwrap(), x);
    }

    #[test]
    fn jacobi_for_structure_constants(s in system(), i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let u = Uea::new(&s);
        let n = s.len();
        let (x, y, z) = (u.root(&s.root(i % n)), u.root(&s.root(j % n)), u.root(&s.root(k % n)));
        let c = |a: &Element, b: &Element| u.commutator(a, b);
        let sum = c(&x, &c(&y, &z)).add(&c(&y, &c(&z, &x))).add(&c(&z, &c(&x, &y)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn multiplication_is_associative(
        s in system(),
        a in prop::collection::vec(0usize..64, 0..3),
        b in prop::collection::vec(0usize..64, 0..3),
        c in prop::collection::vec(0usize..64, 0..3),
    ) {
        let u = Uea::new(&s);
        let (x, y, z) = (element(&u, &a, 2), element(&u, &b, -1), element(&u, &c, 3));
        prop_assert_eq!(u.multiply(&u.multiply(&x, &y), &z), u.multiply(&x, &u.multiply(&y, &z)));
    }

    #[test]
    fn symmetrization_has_the_polynomial_as_symbol(s in system(), picks in prop::collection::vec(0usize..64, 1..4)) {
        let u = Uea::new(&s);
        let mono: Vec<Root> = picks.iter().map(|&k| s.root(k % s.len())).collect();
        let p = CommutingPoly::monomial(mono, Scalar::one());
        prop_assert_eq!(u.principal_symbol(&u.symmetrize(&p)), p);
    }

    #[test]
    fn reconstruction_inverts_evaluation(vals in prop::collection::vec((1i64..9, 1i64..4, any::<bool>()), 6)) {
        for s in [RootSystem::new(TypeLabel::B, 4).unwrap(), RootSystem::new(TypeLabel::D, 5).unwrap()] {
            let f = KostantForm::new(
                kostant_cascade(&s)
                    .roots
                    .into_iter()
                    .zip(&vals)
                    .map(|(b, &(p, q, neg))| (b, Scalar::ratio(if neg { -p } else { p }, q)))
                    .collect(),
            );
            prop_assert_eq!(xi_from_c(&c_from_xi(&f, &s).unwrap(), &s).unwrap(), f);
        }
    }
}
