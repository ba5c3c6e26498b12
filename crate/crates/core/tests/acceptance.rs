//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use k3sym::census::{
    galois_canonical, gamma_admissibility, profiles, q8_fixture_solver, run_p5, run_p7, solve_p5_stage1, vocabulary,
    delta_nu_tables, P5Candidate,
};
use k3sym::cyclotomic::{cos_pi, cot_pi, Cyc};
use k3sym::e8::{
    basis, contains_subsystem, enumerate_roots, inner, is_root, reflect, root_subsystem_type, Dynkin, Isometry,
    LatticeVec, ReflectionWord, Root, RootSystemType,
};
use k3sym::index::{
    signature_defect, signature_g, spin_number, total_defect, FixedPointData, LensSpace, RochlinTable, SpinVector,
    Surface,
};
use k3sym::kummer::{minus_e8_gram, verify_e8_bases, PairingTable};
use k3sym::reps::{e8_census, int_matrix, lift_summand, Lift, RepDecomp, SummandType};
use k3sym::sgnperm::{
    fixed_roots, involution_class, search_q8_obstruction, search_z2_4_obstruction, InvolutionClass, SignedPerm,
    H_ORDER,
};
use k3sym::{CycNum, QPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn cyc(n: u32, terms: &[(i64, i64)]) -> CycNum {
    CycNum::from_terms(n, &terms.iter().map(|&(k, c)| (k, q(c))).collect::<Vec<_>>())
}

fn root_system() -> Outcome {
    let start = Instant::now();
    let roots = enumerate_roots();
    ensure(roots.len() == 240, format!("{} roots", roots.len()))?;
    let set: BTreeSet<[i32; 8]> = roots.iter().map(|r| r.doubled()).collect();
    ensure(set.len() == 240, "duplicate roots")?;
    for r in roots {
        for s in roots {
            let img = reflect(r, s);
            ensure(is_root(&img) && set.contains(&img.doubled()), format!("w_{r}({s}) is not a root"))?;
        }
    }
    let t = within(start, Duration::from_secs(1), "closure")?;
    Ok(format!("240 roots closed under 240 reflections in {t:?}"))
}

fn involution_witnesses() -> Outcome {
    let start = Instant::now();
    let b = basis();
    let v = ReflectionWord(vec![b.f[0], b.f[2], b.f[4], b.f[6]]);
    let rep = involution_class(&v).map_err(|e| e.to_string())?;
    ensure(rep.class == InvolutionClass::FourA, format!("class {}", rep.class))?;
    ensure(rep.odd_witness == Some((b.f[7], 1)), format!("witness {:?}", rep.odd_witness))?;
    // independent pairing for the witness
    ensure(inner(&v.apply(&b.f[7]), &b.f[7]) == 1, "(v(f8), f8) ≠ 1")?;
    let v2 = ReflectionWord(vec![b.f[0], b.f[2], b.f[4], b.f7_prime]);
    let odd = enumerate_roots().iter().filter(|r| inner(&v2.apply(r), r).rem_euclid(2) == 1).count();
    ensure(odd == 0, format!("{odd} roots pair oddly with w_f7'"))?;
    ensure(involution_class(&v2).map_err(|e| e.to_string())?.class == InvolutionClass::FourAPrime, "f7' not 4A'")?;
    let t = within(start, Duration::from_secs(1), "classification")?;
    Ok(format!("4A witness f8 pairing 1; 4A' even on all 240 roots; {t:?}"))
}

fn representation_census() -> Outcome {
    let want: [(u32, Vec<(u32, u32, u32)>); 3] = [
        (3, vec![(1, 0, 5), (2, 0, 2), (1, 2, 1), (0, 4, 0)]),
        (5, vec![(1, 0, 3), (0, 2, 0)]),
        (7, vec![(1, 0, 1)]),
    ];
    let mut sizes = Vec::new();
    for (p, list) in want {
        let got: BTreeSet<RepDecomp> = e8_census(p).map_err(|e| e.to_string())?.into_iter().collect();
        let exp: BTreeSet<RepDecomp> = list.iter().map(|&(r, s, t)| RepDecomp::new(p, r, s, t)).collect();
        ensure(got == exp, format!("p={p}: {got:?}"))?;
        sizes.push(got.len());
    }
    Ok(format!("{sizes:?} decompositions for p = 3, 5, 7"))
}

fn defect_values() -> Outcome {
    let d = |p, q| signature_defect(p, q).map_err(|e| e.to_string());
    ensure(d(5, 1)? == q(-4), format!("def(5,1) = {}", d(5, 1)?))?;
    ensure(d(5, 2)? == q(0) && d(5, 3)? == q(0), "def(5,2), def(5,3) ≠ 0")?;
    let totals = |p| -> Result<Vec<Rational>, String> {
        vocabulary(p).map_err(|e| e.to_string())?.iter().map(|t| t.defect(p).map_err(|e| e.to_string())).collect()
    };
    ensure(totals(5)? == [4, -8, -4, -20].map(q), format!("p=5 totals {:?}", totals(5)?))?;
    ensure(totals(7)? == [10, -8, 2].map(q), format!("p=7 totals {:?}", totals(7)?))?;
    let a4 = vocabulary(5).map_err(|e| e.to_string())?.into_iter().find(|t| t.surfaces.len() == 1).ok_or("no Ã4 type")?;
    for k in 1..5 {
        let s = a4.signature(5, k).map_err(|e| e.to_string())?;
        ensure(s == CycNum::from_int(5, -5), format!("Ã4 Sign at k={k} is {s}"))?;
    }
    Ok("def(5,·) = −4, 0, 0; totals (4,−8,−4,−20) and (10,−8,2); Ã4 Sign −5".into())
}

/// `(u,v,w,A)` and `(x₁,x₂,y₁,y₂,z₁,z₂)`, taken up to `g ↦ g²`.
fn normalize(counts: [u32; 4], pc: [u32; 6]) -> ([u32; 4], [u32; 6]) {
    let sw = [pc[1], pc[0], pc[3], pc[2], pc[5], pc[4]];
    (counts, pc.max(sw))
}

fn labelled(run: &k3sym::census::P5Run, label: &str) -> Result<(P5Candidate, usize), String> {
    run.candidates
        .iter()
        .enumerate()
        .find(|(_, c)| c.case_label() == Some(label))
        .map(|(i, c)| (c.clone(), i))
        .ok_or(format!("case ({label}) missing"))
}

fn p5_census() -> Outcome {
    let start = Instant::now();
    let fams: Vec<_> = profiles(5)
        .map_err(|e| e.to_string())?
        .iter()
        .map(solve_p5_stage1)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let rendered: Vec<String> = fams.iter().map(|f| f.render()).collect();
    ensure(rendered[..2] == ["(2−w+A, 4−w−2A)", "(3−w+A, 2−w−2A)"], format!("families {rendered:?}"))?;
    ensure(fams[2].solutions == [[4, 0, 0, 0]], format!("(0,0,2)² gives {:?}", fams[2].solutions))?;
    let run = run_p5(&RochlinTable::bundled()).map_err(|e| e.to_string())?;
    let paper: BTreeSet<([u32; 4], [u32; 6])> = [
        ([2, 4, 0, 0], [4, 4, 2, 2, 1, 1]),
        ([0, 2, 2, 0], [3, 3, 4, 4, 0, 0]),
        ([0, 2, 2, 0], [4, 2, 2, 6, 0, 0]),
        ([2, 1, 1, 0], [2, 1, 1, 3, 1, 1]),
        ([4, 0, 0, 2], [0, 0, 0, 0, 2, 2]),
        ([2, 1, 1, 1], [2, 1, 1, 3, 1, 1]),
        ([4, 0, 0, 1], [0, 0, 0, 0, 2, 2]),
    ]
    .into_iter()
    .map(|(c, p)| normalize(c, p))
    .collect();
    let listed: Vec<&P5Candidate> = run.candidates.iter().filter(|c| c.profile.first.r + c.profile.second.r > 0).collect();
    let got: BTreeSet<_> = listed.iter().map(|c| normalize(c.counts(), c.point_counts())).collect();
    ensure(listed.len() == 7 && got == paper, format!("refined list {got:?}"))?;
    let eliminated: BTreeSet<&str> =
        run.candidates.iter().zip(&run.audits).filter(|(_, a)| !a.survives).filter_map(|(c, _)| c.case_label()).collect();
    ensure(eliminated == BTreeSet::from(["a", "b", "d", "ii"]), format!("eliminated {eliminated:?}"))?;
    let survivors: BTreeSet<&str> = run.survivors().iter().filter_map(|c| c.case_label()).collect();
    ensure(survivors == BTreeSet::from(["c", "i", "iii"]), format!("survivors {survivors:?}"))?;
    let extra: Vec<String> = run.survivors().iter().filter(|c| c.case_label().is_none()).map(|c| c.id()).collect();
    let t = within(start, Duration::from_secs(60), "p=5 census")?;
    Ok(format!("eliminated (a),(b),(d),(ii); survivors (c),(i),(iii); also {extra:?}; {t:?}"))
}

fn spin_numbers() -> Outcome {
    let run = run_p5(&RochlinTable::bundled()).map_err(|e| e.to_string())?;
    let expected = [
        ("a", cyc(5, &[(0, -3)])),
        ("b", cyc(5, &[(0, -3)])),
        ("c", cyc(5, &[(0, -2), (2, 2), (3, 2)])),
        ("d", cyc(5, &[(2, 1), (3, 1)])),
        ("i", cyc(5, &[(0, 2)])),
        ("iii", cyc(5, &[(0, 2)])),
    ];
    for (label, want) in expected {
        let (c, _) = labelled(&run, label)?;
        let s = spin_number(&c.data().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(s == want, format!("({label}): {s}"))?;
        let d = SpinVector::from_cyc(&s, 2).map_err(|e| e.to_string())?;
        ensure(d.d[0] % 2 == 0, format!("({label}): d0 = {} odd", d.d[0]))?;
        ensure((1..5).all(|k| d.d[k] == d.d[5 - k]), format!("({label}): d not symmetric"))?;
        ensure(d.to_cyc() == s, format!("({label}): vector does not reproduce the value"))?;
    }
    Ok("−3, −3, −2+2μ²+2μ³, μ²+μ³, 2, 2 with even d0 and symmetric d".into())
}

/// Ten points at `k`: two each of `(2k,3k)`, `(−k,−k)`, `(2k,4k)` and four of `(−2k,k)`.
fn ten_points(k: i64) -> Result<FixedPointData, String> {
    let mut pts = Vec::new();
    for (a, b, n) in [(2, 3, 2), (-1, -1, 2), (2, 4, 2), (-2, 1, 4)] {
        pts.extend(std::iter::repeat((a * k, b * k)).take(n));
    }
    FixedPointData::new(7, pts, Vec::new()).map_err(|e| e.to_string())
}

fn p7_census() -> Outcome {
    let start = Instant::now();
    let run = run_p7(&RochlinTable::bundled()).map_err(|e| e.to_string())?;
    let sols: BTreeSet<[u32; 3]> = run.solutions.iter().map(|s| s.counts).collect();
    ensure(sols == BTreeSet::from([[0, 2, 2], [1, 3, 1], [2, 4, 0]]), format!("solutions {sols:?}"))?;
    for s in &run.solutions {
        ensure((s.counts == [0, 2, 2]) == (s.signature_assignments > 0), format!("{:?} has {} assignments", s.counts, s.signature_assignments))?;
    }
    let paper_delta = [[4.31194, 0.63596, 0.05210], [-4.49396, -1.10992, 1.60388], [-2.60388, 3.49396, 0.10992]];
    let paper_nu = [[-1.0, -1.0, -1.0], [-0.44504, -1.80194, 1.24698]];
    let tables = delta_nu_tables(7).map_err(|e| e.to_string())?;
    let close = |x: &CycNum, y: f64| (x.embed(10).re.to_f64() - y).abs() < 1e-4;
    for (row, (name, delta, _)) in tables.iter().enumerate() {
        for k in 0..3 {
            ensure(close(&delta[k], paper_delta[row][k]), format!("δ {name} k={}: {}", k + 1, delta[k].to_f64()))?;
        }
    }
    for (row, (name, _, nu)) in tables.iter().skip(1).enumerate() {
        for k in 0..3 {
            ensure(close(&nu[k], paper_nu[row][k]), format!("ν {name} k={}: {}", k + 1, nu[k].to_f64()))?;
        }
    }
    ensure(run.equal_k_forced, "a Fang survivor mixes k classes")?;
    let theorem = galois_canonical(&ten_points(1)?).map_err(|e| e.to_string())?;
    ensure(run.survivor_structures == [theorem.clone()], format!("survivors {:?}", run.survivor_structures))?;
    for k in 2..7 {
        let other = galois_canonical(&ten_points(k)?).map_err(|e| e.to_string())?;
        ensure(other == theorem, format!("k={k} gives another structure"))?;
    }
    let t = within(start, Duration::from_secs(60), "p=7 census")?;
    Ok(format!("(1,3,1), (2,4,0) eliminated; equal k forced; survivor {theorem}; {t:?}"))
}

fn kirby_siebenmann() -> Outcome {
    let run = run_p5(&RochlinTable::bundled()).map_err(|e| e.to_string())?;
    let (_, i) = labelled(&run, "c")?;
    let a = &run.audits[i];
    ensure(a.sign_n == -8, format!("Sign(N) = {}", a.sign_n))?;
    let paper: Vec<LensSpace> = [(1, 6), (2, 6), (3, 2)]
        .iter()
        .flat_map(|&(q, n)| std::iter::repeat(LensSpace::new(5, q)).take(n))
        .collect();
    let canon = |v: &[LensSpace]| {
        let mut v: Vec<LensSpace> = v.iter().map(|l| l.canonical()).collect();
        v.sort();
        v
    };
    ensure(canon(&a.lens_spaces) == canon(&paper), format!("boundary {:?}", a.lens_spaces))?;
    let ks = a.ks.as_ref().ok_or("no ks outcome")?;
    // 4 for each L(5,1), 0 for L(5,2) and L(5,3)
    let roc = 6 * 4;
    ensure(ks.rochlin_total.rem_euclid(16) == roc % 16, format!("roc = {}", ks.rochlin_total))?;
    ensure((a.sign_n + roc).rem_euclid(16) == 0 && ks.ks == 0, format!("ks = {}", ks.ks))?;
    Ok(format!("Sign(N) = −8, boundary 6 L(5,1) + 8 L(5,2)≅L(5,3), −8 + 24 ≡ 0 mod 16, ks = {}", ks.ks))
}

fn minimal_polynomials() -> Outcome {
    let x = &cot_pi::<Rational>(5, 1).map_err(|e| e.to_string())? / &cot_pi::<Rational>(5, 2).map_err(|e| e.to_string())?;
    let m = x.minimal_polynomial();
    ensure(m == QPoly::from_ints(&[-1, -4, 1]), m.render("t"))?;
    let c = cos_pi::<Rational>(5, 1).map_err(|e| e.to_string())?;
    let n = c.conductor();
    let v = &(&(&CycNum::from_int(n, 4) * &(&c * &c)) - &(&CycNum::from_int(n, 2) * &c)) - &CycNum::one(n);
    ensure(v.is_zero(), format!("4c²−2c−1 = {v}"))?;
    Ok(format!("{}; 4cos²(π/5) − 2cos(π/5) − 1 = 0", m.render("t")))
}

fn fixed_root_systems() -> Outcome {
    let start = Instant::now();
    let g5 = SignedPerm::standard_cycle(5);
    let f5 = fixed_roots(&[g5]);
    let omega1: BTreeSet<[i32; 8]> = (5..8)
        .flat_map(|i| (i + 1..8).flat_map(move |j| [(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(a, b)| LatticeVec::pair(i, a, j, b).doubled())))
        .collect();
    // Ω₂: ±½(e1+…+e5) ± ½(e6 ± e7 ± e8) with an even number of minus signs
    let mut omega2 = BTreeSet::new();
    for s in [1, -1] {
        for tail in 0..8u8 {
            let t: Vec<i32> = (0..3).map(|b| if tail >> b & 1 == 1 { -1 } else { 1 }).collect();
            let mut d = [s; 8];
            d[5..].copy_from_slice(&t);
            if d.iter().filter(|&&x| x < 0).count() % 2 == 0 {
                omega2.insert(d);
            }
        }
    }
    let got: BTreeSet<[i32; 8]> = f5.iter().map(|r| r.doubled()).collect();
    let want: BTreeSet<[i32; 8]> = omega1.union(&omega2).copied().collect();
    ensure(got == want, format!("{} fixed roots for the 5-cycle", got.len()))?;
    let witness: Vec<Root> = [
        LatticeVec::pair(5, 1, 6, -1),
        LatticeVec::half([-1, -1, -1, -1, -1, -1, 1, 1]).map_err(|e| e.to_string())?,
        LatticeVec::half([1, 1, 1, 1, 1, -1, -1, 1]).map_err(|e| e.to_string())?,
        LatticeVec::pair(5, 1, 6, 1),
    ]
    .into_iter()
    .map(|v| Root::new(v).map_err(|e| e.to_string()))
    .collect::<Result<_, _>>()?;
    ensure(witness.iter().all(|r| got.contains(&r.doubled())), "witness not fixed")?;
    let a4 = RootSystemType::new(vec![Dynkin::A(4)]);
    ensure(root_subsystem_type(&witness) == Some(a4.clone()), "witness is not A4")?;
    ensure(contains_subsystem(&f5, &a4), "no A4 found")?;
    ensure(!contains_subsystem(&f5, &RootSystemType::new(vec![Dynkin::D(4)])), "D4 found")?;
    ensure(!contains_subsystem(&f5, &RootSystemType::new(vec![Dynkin::A(2), Dynkin::A(2)])), "A2+A2 found")?;
    let f7 = fixed_roots(&[SignedPerm::standard_cycle(7)]);
    let got7: BTreeSet<[i32; 8]> = f7.iter().map(|r| r.doubled()).collect();
    ensure(got7 == BTreeSet::from([[1; 8], [-1; 8]]), format!("{} fixed roots for the 7-cycle", f7.len()))?;
    ensure(!contains_subsystem(&f7, &RootSystemType::new(vec![Dynkin::A(2)])), "A2 found for p=7")?;
    let g5 = gamma_admissibility(5).map_err(|e| e.to_string())?;
    let g7 = gamma_admissibility(7).map_err(|e| e.to_string())?;
    ensure(g5.admissible == ["A~4"] && g7.admissible.is_empty(), format!("Γ: {:?} {:?}", g5.admissible, g7.admissible))?;
    let t = within(start, Duration::from_secs(10), "fixed roots")?;
    Ok(format!("Ω1∪Ω2 (20 roots), ±½Σe; A4 witness; no D4, A2+A2, A2; only Ã4 admissible; {t:?}"))
}

fn kummer_bases() -> Outcome {
    let rep = verify_e8_bases(&PairingTable::standard()).map_err(|e| e.to_string())?;
    let target = minus_e8_gram();
    // −E8 from the diagram: −2 on the diagonal, 1 on edges of the tree
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for i in 0..8 {
        for j in 0..8 {
            let e = if i == j { -2 } else if edges.contains(&(i.min(j), i.max(j))) { 1 } else { 0 };
            ensure(target[i][j] == e, format!("−E8 entry ({i},{j})"))?;
        }
    }
    ensure(rep.grams.iter().all(|g| *g == target), "a list is not −E8")?;
    ensure(rep.cross_pairs_zero, "lists not orthogonal")?;
    ensure(rep.fibers_orthogonal, "lists not orthogonal to the fibers")?;
    ensure(rep.fiber_products.iter().flatten().all(|&x| x == 0), format!("fiber products {:?}", rep.fiber_products))?;
    Ok(format!("both Gram matrices −E8; orthogonal; [Ti]·[Tj] = 0; span rank {}", rep.span_rank))
}

fn q8_and_theorem() -> Outcome {
    let start = Instant::now();
    let fx = q8_fixture_solver();
    let sp: BTreeSet<i64> = fx.system_solutions.iter().map(|s| s.1).collect();
    let sm: BTreeSet<i64> = fx.system_solutions.iter().map(|s| s.2).collect();
    ensure(sp == BTreeSet::from([4]) && sm == BTreeSet::from([0, 2, 4]), format!("{:?}", fx.system_solutions))?;
    ensure(fx.feasible_counts == [4], format!("feasible {:?}", fx.feasible_counts))?;
    let z = search_z2_4_obstruction();
    ensure(z.averaged_dimension == "1/2" && !z.averaged_is_integer, format!("average {}", z.averaged_dimension))?;
    ensure(z.obstructed && z.max_rank < 4, format!("rank {}", z.max_rank))?;
    let q8 = search_q8_obstruction(H_ORDER).map_err(|e| e.to_string())?;
    ensure(q8.obstructed && q8.conflicts.is_empty(), format!("{} conflicts", q8.conflicts.len()))?;
    ensure(q8.branch_minus_four == BTreeSet::from([4]), format!("−4 branch {:?}", q8.branch_minus_four))?;
    let t = within(start, Duration::from_secs(300), "searches")?;
    Ok(format!("s+ = 4, s− ∈ {{0,2,4}}, 4 fixed points; (Z2)^4 average 1/2, max rank {}; no Q8; {t:?}", z.max_rank))
}

fn lifting() -> Outcome {
    let a = int_matrix(&[&[1, 1], &[0, -1]]);
    let l = lift_summand(&a, &[vec![1, 0]], &[0, 1], SummandType::Cyclotomic, 2).map_err(|e| e.to_string())?;
    ensure(l == Lift::NoLift, format!("{l:?}"))?;
    let b = int_matrix(&[&[0, 1, 1], &[1, 0, -1], &[0, 0, 1]]);
    let l = lift_summand(&b, &[vec![1, 0, 0], vec![0, 1, 0]], &[0, 0, 1], SummandType::Trivial, 2)
        .map_err(|e| e.to_string())?;
    let Lift::Lifted(v) = l else { return Err("trivial summand did not lift".into()) };
    ensure(b.mul_vec(&v) == v && v[2] == 1, format!("lift {v:?} is not fixed"))?;
    let c = int_matrix(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    let l = lift_summand(&c, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]], &[0, 0, 1, 0], SummandType::Regular, 2)
        .map_err(|e| e.to_string())?;
    ensure(matches!(l, Lift::Lifted(_)), "regular summand did not lift")?;
    Ok(format!("no lift for g·y = −y + x; trivial lift {v:?}; regular lift"))
}

fn random_cyc(rng: &mut ChaCha8Rng, n: u32) -> CycNum {
    let terms: Vec<(i64, Rational)> =
        (0..n as i64).map(|k| (k, Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))).collect();
    Cyc::from_terms(n, &terms)
}

fn random_data(rng: &mut ChaCha8Rng) -> Result<FixedPointData, String> {
    let p = [3u32, 5, 7, 11, 13][rng.gen_range(0..5)];
    let pi = i64::from(p);
    let isolated = (0..rng.gen_range(0..8)).map(|_| (rng.gen_range(1..pi), rng.gen_range(1..pi))).collect();
    let surfaces = (0..rng.gen_range(0..3))
        .map(|_| Surface { genus: rng.gen_range(0..3), selfint: rng.gen_range(-6..=6), c: rng.gen_range(1..pi) })
        .collect();
    FixedPointData::new(p, isolated, surfaces).map_err(|e| e.to_string())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b33);
    let mut checked = 0;
    for _ in 0..60 {
        let n = [3u32, 5, 7, 8, 12][rng.gen_range(0..5)];
        let (a, b, c) = (random_cyc(&mut rng, n), random_cyc(&mut rng, n), random_cyc(&mut rng, n));
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "associativity")?;
        ensure(&a * &b == &b * &a && &a + &b == &b + &a, "commutativity")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity")?;
        if !a.is_zero() {
            let inv = a.inv().ok_or("no inverse")?;
            ensure(&a * &inv == CycNum::one(n), "inverse")?;
        }
        checked += 1;
    }
    let roots = enumerate_roots();
    for _ in 0..200 {
        let g = SignedPerm::random(&mut rng);
        let u = *roots[rng.gen_range(0..240)] + *roots[rng.gen_range(0..240)];
        let v = *roots[rng.gen_range(0..240)];
        ensure(inner(&g.apply(&u), &g.apply(&v)) == inner(&u, &v), format!("{g} is not an isometry"))?;
    }
    let mut mismatches = 0;
    for _ in 0..100 {
        let data = random_data(&mut rng)?;
        let mut sum = CycNum::zero(data.p);
        for k in 1..i64::from(data.p) {
            sum = &sum + &signature_g(&data.power(k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        }
        let defect = total_defect(&data).map_err(|e| e.to_string())?;
        if sum.as_rational() != Some(defect) {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, format!("{mismatches} signature mismatches"))?;
    Ok(format!("{checked} field-axiom samples, 200 isometry samples, 100 signature pairs, 0 mismatches"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("root system", root_system),
        ("involution classification", involution_witnesses),
        ("representation census", representation_census),
        ("defect values", defect_values),
        ("p=5 census", p5_census),
        ("spin numbers", spin_numbers),
        ("p=7 census", p7_census),
        ("Kirby-Siebenmann", kirby_siebenmann),
        ("minimal polynomials", minimal_polynomials),
        ("fixed root systems", fixed_root_systems),
        ("Kummer E8 bases", kummer_bases),
        ("Q8 and (Z2)^4", q8_and_theorem),
        ("lifting", lifting),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(e) => {
                println!("FAIL {:>2} {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
