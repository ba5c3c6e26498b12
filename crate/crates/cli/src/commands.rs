//! Report builders, one per subcommand.

use std::collections::{BTreeSet, VecDeque};

use k3sym::census::{
    self, delta_nu_tables, exact_and_decimal, gamma_admissibility, galois_canonical, involution_fixture_check,
    q8_fixture_solver, render_cyc, FixedSetShape, InvolutionVerdict, Record, Report, SIGN_M,
};
use k3sym::cyclotomic::{cos_pi, cot_pi};
use k3sym::e8::{
    basis, contains_subsystem, enumerate_roots, inner, root_subsystem_type, Dynkin, Isometry, LatticeVec, ReflectionWord,
    Root, RootSystemType,
};
use k3sym::index::{
    orbifold_signature, signature_defect, signature_g_rational, total_defect, FixedPointData, RochlinTable,
};
use k3sym::kummer::{minus_e8_gram, verify_e8_bases, PairingTable};
use k3sym::reps::{decompose, e8_census, int_matrix, lift_summand, realizations, Lift, RepDecomp, SummandType};
use k3sym::sgnperm::{
    classify_order4, fixed_roots, four_a_prime_involutions, involution_class, odd_classes_by_charpoly, rep_diagonal,
    rep_transpositions, search_q8_obstruction, search_z2_4_obstruction, InvolutionClass, Order4Case, SignedPerm,
};
use k3sym::{CycNum, QPoly, Rational};

pub struct Config {
    pub digits: u32,
    pub budget: u64,
    pub pairing: PairingTable,
}

type Outcome = Result<Report, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn lemma_4_2(cfg: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-4.2");
    r.input("pairing table", if cfg.pairing == PairingTable::standard() { "standard" } else { "custom" });
    let rep = match verify_e8_bases(&cfg.pairing) {
        Ok(rep) => rep,
        Err(e) => {
            r.check("bases", false, e.to_string());
            return Ok(r);
        }
    };
    let target = minus_e8_gram();
    for (l, g) in rep.grams.iter().enumerate() {
        let rows: Vec<String> =
            g.iter().map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")).collect();
        r.candidates.push(Record::new(format!("list {}", l + 1)).with("gram", rows.join("; ")));
        r.check(format!("list {} gram is -E8", l + 1), *g == target, "matches the Dynkin adjacency");
    }
    r.check("lists orthogonal", rep.cross_pairs_zero, "every cross pairing is 0");
    r.check("orthogonal to fibers", rep.fibers_orthogonal, "[T1], [T2], [T3] pair to 0 with both lists");
    let zero = rep.fiber_products.iter().flatten().all(|&x| x == 0);
    r.check("fiber products", zero, format!("{:?}", rep.fiber_products));
    r.check("span rank", rep.span_rank == 19, format!("{}", rep.span_rank));
    r.check("gram rank", rep.gram_rank == 16, format!("{}", rep.gram_rank));
    r.check("radical", rep.radical_is_fiber_span, format!("dimension {}, spanned by the fibers", rep.radical_dimension));
    Ok(r)
}

pub fn lemma_4_5(_: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-4.5");
    let expected: [(u32, &[(u32, u32, u32)]); 3] = [
        (3, &[(1, 0, 5), (2, 0, 2), (1, 2, 1), (0, 4, 0)]),
        (5, &[(1, 0, 3), (0, 2, 0)]),
        (7, &[(1, 0, 1)]),
    ];
    for (p, list) in expected {
        let census = e8_census(p).map_err(err)?;
        let want: BTreeSet<RepDecomp> = list.iter().map(|&(a, b, c)| RepDecomp::new(p, a, b, c)).collect();
        let got: BTreeSet<RepDecomp> = census.iter().copied().collect();
        for d in &census {
            r.candidates.push(Record::new(format!("p={p}")).with("decomposition", d).with("charpoly", d.charpoly()));
        }
        r.check(format!("census p={p}"), got == want, format!("{} decompositions", census.len()));
        for (d, w) in realizations(p).map_err(err)? {
            r.candidates.push(Record::new(format!("p={p} realization")).with("decomposition", d).with("reflections", w.0.len()));
            r.check(format!("realization {d} listed"), got.contains(&d), "Coxeter element of a root subsystem");
        }
    }
    Ok(r)
}

pub fn lemma_5_1(_: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-5.1");
    let b = basis();
    let v = ReflectionWord(vec![b.f[0], b.f[2], b.f[4], b.f[6]]);
    let rep = involution_class(&v).map_err(err)?;
    let witness = rep.odd_witness.map(|(w, k)| (w == b.f[7], k));
    r.candidates.push(Record::new("w_f1 w_f3 w_f5 w_f7").with("class", rep.class).with("length", rep.length));
    r.check("class 4A", rep.class == InvolutionClass::FourA, rep.class.to_string());
    r.check("witness f8 with pairing 1", witness == Some((true, 1)), format!("{:?}", rep.odd_witness.map(|(_, k)| k)));
    let v2 = ReflectionWord(vec![b.f[0], b.f[2], b.f[4], b.f7_prime]);
    let rep2 = involution_class(&v2).map_err(err)?;
    let odd = enumerate_roots().iter().filter(|x| inner(&v2.apply(x), x).rem_euclid(2) == 1).count();
    r.candidates.push(Record::new("w_f1 w_f3 w_f5 w_f7'").with("class", rep2.class).with("odd pairings", odd));
    r.check("class 4A'", rep2.class == InvolutionClass::FourAPrime, rep2.class.to_string());
    r.check("all 240 pairings even", odd == 0, format!("{odd} odd"));
    Ok(r)
}

/// Orbit of `x` under conjugation by `H`, from generators.
fn conjugacy_orbit(x: SignedPerm) -> BTreeSet<SignedPerm> {
    let gens = [
        SignedPerm::from_cycles(&[&[0, 1]], [1; 8]).expect("valid"),
        SignedPerm::from_cycles(&[&[0, 1, 2, 3, 4, 5, 6, 7]], [1; 8]).expect("valid"),
        SignedPerm::diag([-1, -1, 1, 1, 1, 1, 1, 1]).expect("even signs"),
    ];
    let mut seen = BTreeSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for g in &gens {
            let z = y.conjugate_by(g);
            if seen.insert(z) {
                queue.push_back(z);
            }
        }
    }
    seen
}

pub fn lemma_5_2(_: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-5.2");
    let examples: [(&[&[u8]], [i8; 8], Order4Case, i64); 3] = [
        (&[&[0, 1], &[2, 3]], [1, -1, 1, -1, -1, -1, -1, -1], Order4Case::Transpositions(2), -4),
        (&[&[0, 1], &[2, 3], &[4, 5]], [1, -1, 1, -1, 1, 1, -1, -1], Order4Case::Transpositions(3), -2),
        (&[&[0, 1, 2, 3], &[4, 5, 6, 7]], [-1; 8], Order4Case::TwoFourCycles, 0),
    ];
    for (cycles, eps, case, tr) in examples {
        let g = SignedPerm::from_cycles(cycles, eps).map_err(err)?;
        let got = classify_order4(&g).map_err(err)?;
        r.candidates.push(Record::new(g.to_string()).with("case", got.0).with("trace", got.1));
        r.check(format!("{g} is {case}"), got == (case, tr), format!("trace {}", got.1));
    }
    let pool: BTreeSet<SignedPerm> = four_a_prime_involutions().into_iter().collect();
    let d = conjugacy_orbit(rep_diagonal());
    let p = conjugacy_orbit(rep_transpositions());
    r.candidates.push(Record::new("4A' in H").with("total", pool.len()).with("class of D", d.len()).with("class of P", p.len()));
    r.check("class of D", d.len() == 70, d.len().to_string());
    r.check("class of P", p.len() == 840, p.len().to_string());
    let union: BTreeSet<SignedPerm> = d.union(&p).copied().collect();
    r.check("D and P exhaust 4A'", union == pool, format!("{} of {}", union.len(), pool.len()));
    Ok(r)
}

pub fn lemma_5_3(_: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-5.3");
    q8_checks(&mut r);
    Ok(r)
}

fn q8_checks(r: &mut Report) {
    let fx = q8_fixture_solver();
    for &(t, sp, sm) in &fx.system_solutions {
        r.candidates.push(Record::new(format!("t={t}")).with("s+", sp).with("s-", sm));
    }
    let s_plus: BTreeSet<i64> = fx.system_solutions.iter().map(|s| s.1).collect();
    let s_minus: BTreeSet<i64> = fx.system_solutions.iter().map(|s| s.2).collect();
    r.check("s+ = 4", s_plus == BTreeSet::from([4]), format!("{s_plus:?}"));
    r.check("s- in {0,2,4}", s_minus == BTreeSet::from([0, 2, 4]), format!("{s_minus:?}"));
    r.filters.push(
        Record::new("fixed point counts")
            .with("from system", format!("{:?}", fx.fixed_point_counts))
            .with("feasible", format!("{:?}", fx.feasible_counts)),
    );
    r.check("exactly 4 fixed points", fx.feasible_counts == [4], format!("{:?}", fx.feasible_counts));
}

fn signed(i: usize, j: usize, si: i32, sj: i32) -> LatticeVec {
    LatticeVec::pair(i, si, j, sj)
}

pub fn lemma_6_3(_: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-6.3");
    let g = SignedPerm::standard_cycle(5);
    let d = decompose(&g, 5).map_err(err)?;
    r.check("representation", d == RepDecomp::new(5, 1, 0, 3), d.to_string());
    let fixed = fixed_roots(&[g]);
    let mut omega1 = BTreeSet::new();
    for i in 5..8 {
        for j in i + 1..8 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                omega1.insert(signed(i, j, si, sj).doubled());
            }
        }
    }
    let got1: BTreeSet<[i32; 8]> = fixed.iter().map(|x| x.doubled()).filter(|x| x[..5].iter().all(|&c| c == 0)).collect();
    let omega2: Vec<String> =
        fixed.iter().filter(|x| x.doubled()[..5].iter().any(|&c| c != 0)).map(|x| x.to_string()).collect();
    r.candidates.push(Record::new("fixed roots").with("count", fixed.len()).with("Omega2", omega2.join(" ")));
    r.check("Omega1", got1 == omega1, format!("{} roots", got1.len()));
    r.check("Omega2", omega2.len() == 8, format!("{} roots", omega2.len()));
    let witness = a4_witness().map_err(err)?;
    let ty = root_subsystem_type(&witness);
    let all_fixed = witness.iter().all(|x| g.apply(x) == **x);
    r.check(
        "A4 witness",
        all_fixed && ty == Some(RootSystemType::new(vec![Dynkin::A(4)])),
        format!("{}", ty.map_or("none".into(), |t| t.to_string())),
    );
    for t in [RootSystemType::new(vec![Dynkin::D(4)]), RootSystemType::new(vec![Dynkin::A(2), Dynkin::A(2)])] {
        let found = contains_subsystem(&fixed, &t);
        r.check(format!("no {t}"), !found, format!("found: {found}"));
    }
    gamma_checks(&mut r, 5)?;
    Ok(r)
}

fn a4_witness() -> Result<Vec<Root>, k3sym::e8::E8Error> {
    [
        signed(5, 6, 1, -1),
        LatticeVec::half([-1, -1, -1, -1, -1, -1, 1, 1])?,
        LatticeVec::half([1, 1, 1, 1, 1, -1, -1, 1])?,
        signed(5, 6, 1, 1),
    ]
    .into_iter()
    .map(Root::new)
    .collect()
}

fn gamma_checks(r: &mut Report, p: u32) -> Result<(), String> {
    let gc = gamma_admissibility(p).map_err(err)?;
    for (name, cong, fits, found) in &gc.candidates {
        r.filters.push(
            Record::new(format!("Gamma {name}"))
                .with("congruence", cong)
                .with("rank fits", fits)
                .with("found", found),
        );
    }
    let want: Vec<String> = if p == 5 { vec!["A~4".into()] } else { Vec::new() };
    r.check(format!("admissible Gamma for p={p}"), gc.admissible == want, format!("{:?}", gc.admissible));
    Ok(())
}

pub fn lemma_6_4(cfg: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-6.4");
    r.input("digits", cfg.digits);
    let x = &cot_pi::<Rational>(5, 1).map_err(err)? / &cot_pi::<Rational>(5, 2).map_err(err)?;
    let m = x.minimal_polynomial();
    r.candidates.push(
        Record::new("cot(pi/5)/cot(2pi/5)").with("value", exact_and_decimal(&x, cfg.digits)).with("minimal polynomial", m.render("t")),
    );
    r.check("minimal polynomial", m == QPoly::from_ints(&[-1, -4, 1]), m.render("t"));
    let c = cos_pi::<Rational>(5, 1).map_err(err)?;
    let four = QPoly::from_ints(&[-1, -2, 4]);
    let n = c.conductor();
    let value = &(&(&CycNum::from_int(n, 4) * &(&c * &c)) - &(&CycNum::from_int(n, 2) * &c)) - &CycNum::one(n);
    r.candidates.push(Record::new("cos(pi/5)").with("value", exact_and_decimal(&c, cfg.digits)).with("4t^2-2t-1", render_cyc(&value)));
    r.check("cos(pi/5) root of 4t^2-2t-1", value.is_zero(), render_cyc(&value));
    r.check("irreducible", c.minimal_polynomial() == four.monic(), c.minimal_polynomial().render("t"));
    Ok(r)
}

pub fn lemma_6_5(_: &Config) -> Outcome {
    let mut r = Report::new("verify lemma-6.5");
    let g = SignedPerm::standard_cycle(7);
    let fixed = fixed_roots(&[g]);
    let want: BTreeSet<[i32; 8]> = [[1; 8], [-1; 8]].into_iter().collect();
    let got: BTreeSet<[i32; 8]> = fixed.iter().map(|x| x.doubled()).collect();
    r.candidates.push(Record::new("fixed roots").with("roots", fixed.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")));
    r.check("fixed roots are ±(e1+…+e8)/2", got == want, format!("{} roots", got.len()));
    let a2 = RootSystemType::new(vec![Dynkin::A(2)]);
    let found = contains_subsystem(&fixed, &a2);
    r.check("no A2", !found, format!("found: {found}"));
    let classes = odd_classes_by_charpoly(7);
    for (poly, forms) in &classes {
        r.candidates.push(Record::new(format!("charpoly {poly}")).with("normal forms", forms.len()));
    }
    let unique = classes.values().all(|f| f.len() == 1);
    r.check("charpoly determines the class", unique, format!("{} polynomials", classes.len()));
    gamma_checks(&mut r, 7)?;
    Ok(r)
}

pub fn remark_4_7(_: &Config) -> Outcome {
    let mut r = Report::new("verify remark-4.7");
    // g·x = x, g·y = −y + x, sublattice ⟨x⟩
    let a = int_matrix(&[&[1, 1], &[0, -1]]);
    let lift = lift_summand(&a, &[vec![1, 0]], &[0, 1], SummandType::Cyclotomic, 2).map_err(err)?;
    r.candidates.push(Record::new("g·x=x, g·y=-y+x").with("quotient", "cyclotomic").with("lift", format!("{lift:?}")));
    r.check("no lift", lift == Lift::NoLift, format!("{lift:?}"));
    // e1 ↔ e2 and e3 ↦ e3 + e1 − e2 over ⟨e1, e2⟩
    let b = int_matrix(&[&[0, 1, 1], &[1, 0, -1], &[0, 0, 1]]);
    let sub = [vec![1, 0, 0], vec![0, 1, 0]];
    let lift = lift_summand(&b, &sub, &[0, 0, 1], SummandType::Trivial, 2).map_err(err)?;
    let ok = matches!(&lift, Lift::Lifted(v) if b.mul_vec(v) == *v && v[2] == 1);
    r.candidates.push(Record::new("swap with shear").with("quotient", "trivial").with("lift", format!("{lift:?}")));
    r.check("trivial summand lifts to a fixed vector", ok, format!("{lift:?}"));
    let c = int_matrix(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    let lift = lift_summand(&c, &[vec![1, 1, 0, 0], vec![1, 0, 0, 0]], &[0, 0, 1, 0], SummandType::Regular, 2).map_err(err)?;
    r.candidates.push(Record::new("permutation").with("quotient", "regular").with("lift", format!("{lift:?}")));
    r.check("regular summand lifts", matches!(lift, Lift::Lifted(_)), format!("{lift:?}"));
    let id = int_matrix(&[&[1, 0], &[0, 1]]);
    let lift = lift_summand(&id, &[vec![1, 0]], &[0, 1], SummandType::Trivial, 3).map_err(err)?;
    r.check("identity action lifts", lift == Lift::Lifted(vec![0, 1]), format!("{lift:?}"));
    Ok(r)
}

pub fn theorem_1_7(cfg: &Config) -> Outcome {
    let mut r = Report::new("verify theorem-1.7");
    r.input("budget", cfg.budget);
    let z = search_z2_4_obstruction();
    r.candidates.push(
        Record::new("(Z2)^4")
            .with("averaged dimension", &z.averaged_dimension)
            .with("4A' in H", z.four_a_prime_in_h)
            .with("max rank", z.max_rank)
            .with("rank-two example", format!("{} {}", z.rank_two_example.0, z.rank_two_example.1))
            .with("rank-two average", &z.rank_two_average),
    );
    r.check("averaged dimension 1/2", z.averaged_dimension == "1/2" && !z.averaged_is_integer, z.averaged_dimension.clone());
    r.check("no (Z2)^4 in 4A'", z.obstructed, format!("max rank {}", z.max_rank));
    let q = match search_q8_obstruction(cfg.budget) {
        Ok(q) => q,
        Err(e) => {
            r.check("Q8 search", false, e.to_string());
            return Ok(r);
        }
    };
    let triples: Vec<String> = q.triples.iter().map(|t| format!("({},{},{})", t[0], t[1], t[2])).collect();
    r.candidates.push(
        Record::new("Q8")
            .with("scanned", q.scanned)
            .with("square roots", format!("{:?}", q.square_roots))
            .with("pairs", q.q8_pairs)
            .with("shapes", format!("{:?}", q.shapes))
            .with("trace triples", triples.join(" ")),
    );
    r.filters.push(
        Record::new("Q8 branches")
            .with("tr i = tr j = -4", format!("{:?}", q.branch_minus_four))
            .with("tr i = tr j = -2", format!("{:?}", q.branch_minus_two)),
    );
    let allowed: BTreeSet<i64> = [-4, -2, 0, 2, 4].into_iter().collect();
    r.check("order-4 traces", q.order4_traces.is_subset(&allowed), format!("{:?}", q.order4_traces));
    r.check("branch -4", !q.branch_minus_four.contains(&-4), format!("{:?}", q.branch_minus_four));
    r.check("branch -2", !q.branch_minus_two.contains(&-2), format!("{:?}", q.branch_minus_two));
    r.check("no Q8 with traces summing to -4", q.obstructed, format!("{} conflicts", q.conflicts.len()));
    Ok(r)
}

/// Lefschetz, signature and Galois consistency of census output.
fn consistency(r: &mut Report, profile: &census::ThetaProfile, data: &FixedPointData) -> Result<(), String> {
    let id = data.to_string();
    r.check(format!("{id}: Lefschetz"), data.euler_characteristic() == profile.euler_total(), profile.euler_total().to_string());
    let target = rat(profile.target_signature());
    let mut ok = true;
    for j in 1..i64::from(data.p) {
        ok &= signature_g_rational(&data.power(j).map_err(err)?).map_err(err)? == target;
    }
    r.check(format!("{id}: Sign(g^j)"), ok, target.to_string());
    let defect = total_defect(data).map_err(err)?;
    r.check(format!("{id}: defects"), defect == rat(profile.defect_total()), defect.to_string());
    orbifold_signature(SIGN_M, data).map_err(err)?;
    Ok(())
}

pub fn census_p5(cfg: &Config, table: &RochlinTable) -> Outcome {
    let run = census::run_p5(table).map_err(err)?;
    let mut r = census::p5_report(&run);
    r.input("digits", cfg.digits);
    for c in &run.candidates {
        let data = c.data().map_err(err)?;
        consistency(&mut r, &c.profile, &data)?;
    }
    let ids: BTreeSet<String> = run.survivors().iter().map(|c| galois_canonical(&c.data().unwrap()).unwrap().to_string()).collect();
    for c in run.survivors() {
        let twisted = galois_canonical(&c.data().map_err(err)?.power(2).map_err(err)?).map_err(err)?;
        r.check(format!("{}: g -> g^2", c.id()), ids.contains(&twisted.to_string()), twisted.to_string());
    }
    for (c, a) in run.candidates.iter().zip(&run.audits) {
        let tori = c.data().map_err(err)?.surfaces.iter().filter(|s| s.genus == 1).count() as u32;
        r.check(format!("{}: tori", c.id()), tori <= a.max_tori, format!("{tori} <= {}", a.max_tori));
        if !c.profile.both_nontrivial() {
            r.filters.push(Record::new(c.id()).with("note", "outside hypotheses: Θ trivial on one summand"));
        }
    }
    Ok(r)
}

pub fn census_p7(cfg: &Config, table: &RochlinTable) -> Outcome {
    let run = census::run_p7(table).map_err(err)?;
    let mut r = census::p7_report(&run, cfg.digits).map_err(err)?;
    r.input("digits", cfg.digits);
    for a in &run.assignments {
        consistency(&mut r, &run.profile, &a.data().map_err(err)?)?;
    }
    Ok(r)
}

pub fn census_q8(_: &Config) -> Outcome {
    let mut r = Report::new("census q8");
    q8_checks(&mut r);
    Ok(r)
}

pub fn census_involution(_: &Config) -> Outcome {
    let mut r = Report::new("census involution");
    let fixtures: [(&str, Vec<(u32, i64)>, Option<FixedSetShape>); 5] = [
        ("empty", vec![], Some(FixedSetShape::Empty)),
        ("two tori", vec![(1, 0), (1, 0)], Some(FixedSetShape::TwoTori)),
        ("spheres and a torus", vec![(0, -2), (0, -2), (1, 0)], Some(FixedSetShape::SpheresAndTorus { spheres: 2, tori: 1 })),
        ("genus 2", vec![(2, -2)], None),
        ("odd sphere", vec![(0, -1), (0, -1)], None),
    ];
    for (name, comps, want) in fixtures {
        let v = involution_fixture_check(&comps);
        r.candidates.push(Record::new(name).with("components", format!("{comps:?}")).with("verdict", format!("{v:?}")));
        let ok = match (&v, want) {
            (InvolutionVerdict::Admissible(s), Some(w)) => *s == w,
            (InvolutionVerdict::Rejected(_), None) => true,
            _ => false,
        };
        r.check(name, ok, format!("{v:?}"));
        if let InvolutionVerdict::Admissible(_) = v {
            r.survivors.push(name.to_string());
        }
    }
    Ok(r)
}

pub fn defect_table(cfg: &Config) -> Outcome {
    let mut r = Report::new("defect-table");
    r.input("digits", cfg.digits);
    for p in [5u32, 7] {
        for q in 1..i64::from(p) {
            let d = signature_defect(p, q).map_err(err)?;
            r.candidates.push(Record::new(format!("L({p},{q})")).with("def", &d));
        }
        for t in census::vocabulary(p).map_err(err)? {
            let d = t.defect(p).map_err(err)?;
            r.candidates.push(Record::new(format!("p={p} type {}", t.name)).with("defect", &d).with("points", t.euler_characteristic()));
        }
        for (name, delta, nu) in delta_nu_tables(p).map_err(err)? {
            let row = |v: &[CycNum]| v.iter().map(|x| exact_and_decimal(x, cfg.digits)).collect::<Vec<_>>().join("; ");
            r.filters.push(Record::new(format!("p={p} type {name}")).with("delta k=1,2,3", row(&delta)).with("nu k=1,2,3", row(&nu)));
        }
    }
    let d = |q| signature_defect(5, q).map_err(err);
    r.check("def(5,1)", d(1)? == rat(-4), d(1)?.to_string());
    r.check("def(5,2) = def(5,3) = 0", d(2)? == rat(0) && d(3)? == rat(0), format!("{} {}", d(2)?, d(3)?));
    let totals = |p| -> Result<Vec<Rational>, String> {
        census::vocabulary(p).map_err(err)?.iter().map(|t| t.defect(p).map_err(err)).collect()
    };
    let t5 = totals(5)?;
    let t7 = totals(7)?;
    r.check("p=5 totals", t5 == [4, -8, -4, -20].map(rat), format!("{t5:?}"));
    r.check("p=7 totals", t7 == [10, -8, 2].map(rat), format!("{t7:?}"));
    Ok(r)
}

/// Every fast check, merged into one report.
pub fn selftest(cfg: &Config, table: &RochlinTable) -> Outcome {
    let mut r = Report::new("selftest");
    let parts: Vec<(&str, Outcome)> = vec![
        ("lemma-4.2", lemma_4_2(cfg)),
        ("lemma-4.5", lemma_4_5(cfg)),
        ("lemma-5.1", lemma_5_1(cfg)),
        ("lemma-5.2", lemma_5_2(cfg)),
        ("lemma-5.3", lemma_5_3(cfg)),
        ("lemma-6.3", lemma_6_3(cfg)),
        ("lemma-6.4", lemma_6_4(cfg)),
        ("remark-4.7", remark_4_7(cfg)),
        ("census p5", census_p5(cfg, table)),
        ("census p7", census_p7(cfg, table)),
        ("census involution", census_involution(cfg)),
        ("defect-table", defect_table(cfg)),
    ];
    for (name, out) in parts {
        let sub = out?;
        for c in sub.checks {
            r.check(format!("{name}: {}", c.name), c.passed, c.detail);
        }
        r.survivors.extend(sub.survivors.into_iter().map(|s| format!("{name}: {s}")));
    }
    Ok(r)
}
