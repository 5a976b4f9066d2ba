//! The embedded verification suite: sixteen checks covering every corner of
//! the library against stored reference values. Hermetic and deterministic;
//! each check reports a one-line detail string on success and a diagnostic
//! on failure.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use permlab::boards::{
    count_avoiding_frps, oplus_one_separator, shape_wilf_probe, FerrersShape,
};
use permlab::classes::{
    class_compose_members, count_av, count_class_by_oracle, g_k, minimal_basis, ray_west_j,
    symmetry_classes, wilf_classify, ClassSpec,
};
use permlab::derange::{
    derangement_counts, fix_exc_distribution, separable_displacement_dp, separable_profile_brute,
    survey_gn_minus_one,
};
use permlab::machines::{
    avoids_barred_35241, basis_theorem_class, bounded_pq_sortable, c_machine_class,
    pq_pairs_count, west_sortable, CMachine, RsStack, SeriesMachine, DEFAULT_BUDGET,
};
use permlab::order::{
    partition_downset_rank, survey_composition_subword, survey_downset_unimodality,
    survey_downset_unimodality_sampled, Partition,
};
use permlab::perm::Permutation;
use permlab::poly::BivariatePoly;
use permlab::series::{
    algebraic_residual, fine_catalan_check, hankel_report, stieltjes_cf, CountingSequence,
};

use crate::reference as refs;

type CheckFn = fn() -> Result<String, String>;

/// One named verification check.
pub struct Check {
    pub id: &'static str,
    pub title: &'static str,
    pub run: CheckFn,
}

/// Outcome of one executed check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

/// The paper suite, in order.
pub fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "c01",
            title: "Stanton partition rank sequence and non-unimodality",
            run: check_stanton,
        },
        Check {
            id: "c02",
            title: "Fine's sequence counts 132-, 321-, and 213-avoiding derangements",
            run: check_fine_family,
        },
        Check {
            id: "c03",
            title: "231- and 123-avoiding derangement counts",
            run: check_other_derangements,
        },
        Check {
            id: "c04",
            title: "joint fix/exc distributions and strict inequalities",
            run: check_distributions,
        },
        Check {
            id: "c05",
            title: "separable counts, separable derangements, DP vs brute force",
            run: check_separable,
        },
        Check {
            id: "c06",
            title: "symmetry classes and candidate Wilf classes",
            run: check_symmetry_wilf,
        },
        Check {
            id: "c07",
            title: "g_1 formula and Ray–West j range",
            run: check_gk,
        },
        Check {
            id: "c08",
            title: "shape-Wilf equivalences and Stankova dominance to 7 columns",
            run: check_shape_wilf,
        },
        Check {
            id: "c09",
            title: "1342⊕1 vs 2413⊕1 separation; unbalanced equivalence {1324,3416725}~{1234}",
            run: check_separations,
        },
        Check {
            id: "c10",
            title: "two stacks in series: S_6, Tarjan's permutation, basis sizes, composition",
            run: check_two_stacks,
        },
        Check {
            id: "c11",
            title: "West 2-stack-sortable ⟺ Av(2341) ∧ barred pattern, n ≤ 9",
            run: check_west,
        },
        Check {
            id: "c12",
            title: "(2,2)-stack counts, basis, dual closure, algebraic residual",
            run: check_stack22,
        },
        Check {
            id: "c13",
            title: "container-machine basis theorem over all bases in S_3",
            run: check_cmachines,
        },
        Check {
            id: "c14",
            title: "priority queues: transformable pairs and bounded sorting",
            run: check_priority_queues,
        },
        Check {
            id: "c15",
            title: "Stieltjes diagnostics: Catalan vs Av(4231,4123,4312)",
            run: check_stieltjes,
        },
        Check {
            id: "c16",
            title: "conjecture surveys run clean",
            run: check_surveys,
        },
    ]
}

pub fn run_check(check: &Check) -> CheckOutcome {
    let start = Instant::now();
    let result = (check.run)();
    let seconds = start.elapsed().as_secs_f64();
    match result {
        Ok(detail) => CheckOutcome {
            id: check.id,
            title: check.title,
            passed: true,
            detail,
            seconds,
        },
        Err(detail) => CheckOutcome {
            id: check.id,
            title: check.title,
            passed: false,
            detail,
            seconds,
        },
    }
}

/// Runs all checks (optionally restricted to one id). Prints one line per
/// check as it completes.
pub fn run_suite(only: Option<&str>, quiet: bool) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();
    for check in checks() {
        if only.is_some_and(|id| id != check.id) {
            continue;
        }
        let outcome = run_check(&check);
        if !quiet {
            println!(
                "{} {} [{:.1}s] {} — {}",
                if outcome.passed { "PASS" } else { "FAIL" },
                outcome.id,
                outcome.seconds,
                outcome.title,
                outcome.detail,
            );
        }
        outcomes.push(outcome);
    }
    outcomes
}

fn fail(msg: impl Into<String>) -> String {
    msg.into()
}

fn p(s: &str) -> Permutation {
    s.parse().expect("valid literal")
}

fn spec(s: &str) -> ClassSpec {
    ClassSpec::parse(s).expect("valid basis literal")
}

fn seq_matches(
    computed: &CountingSequence,
    reference: &refs::ReferenceSequence,
    through: usize,
) -> Result<(), String> {
    for (offset, &want) in reference.terms.iter().enumerate() {
        let n = reference.first_index + offset;
        if n > through {
            break;
        }
        let got = computed
            .term(n)
            .ok_or_else(|| format!("{}: missing term {n}", reference.name))?;
        if *got != BigUint::from(want) {
            return Err(format!(
                "{}: term {n} computed {got}, reference {want}",
                reference.name
            ));
        }
    }
    Ok(())
}

// 1. Stanton rank sequence, exact, with the unimodality verdict.
fn check_stanton() -> Result<String, String> {
    let lambda: Partition = "8,8,4,4".parse().map_err(|e| fail(format!("{e}")))?;
    let ranks = partition_downset_rank(&lambda).map_err(|e| fail(format!("{e}")))?;
    let got = ranks.as_u64().ok_or("overflow")?;
    if got != refs::STANTON_RANKS.terms {
        return Err(format!("rank sequence mismatch: {got:?}"));
    }
    let profile = ranks.profile();
    if profile.unimodal {
        return Err("sequence reported unimodal; the dip at 31,30,31 was missed".into());
    }
    if !profile.first_half_increasing {
        return Err("first-half increase failed".into());
    }
    Ok("25 ranks exact; non-unimodal as expected".into())
}

// 2. Fine's sequence for the three-pattern family.
fn check_fine_family() -> Result<String, String> {
    let d132 = derangement_counts(&spec("132"), 9).map_err(|e| fail(format!("{e}")))?;
    let d321 = derangement_counts(&spec("321"), 9).map_err(|e| fail(format!("{e}")))?;
    let d213 = derangement_counts(&spec("213"), 9).map_err(|e| fail(format!("{e}")))?;
    seq_matches(&d132, &refs::FINE, 9)?;
    seq_matches(&d321, &refs::FINE, 9)?;
    if d213 != d132 {
        return Err("Av(213) derangements differ from Av(132)".into());
    }
    let catalan = CountingSequence::catalan(10);
    if !fine_catalan_check(&d132, &catalan, 9).map_err(|e| fail(format!("{e}")))? {
        return Err("Catalan = 2·Fine + shifted Fine identity failed".into());
    }
    Ok("0,1,2,6,18,57,186,622,2120 for all three patterns; Catalan identity holds".into())
}

// 3. The other two length-three derangement sequences.
fn check_other_derangements() -> Result<String, String> {
    let d231 = derangement_counts(&spec("231"), 9).map_err(|e| fail(format!("{e}")))?;
    let d123 = derangement_counts(&spec("123"), 9).map_err(|e| fail(format!("{e}")))?;
    seq_matches(&d231, &refs::DER_231, 9)?;
    seq_matches(&d123, &refs::DER_123, 9)?;
    // spot-check the rendered proportions against the stored decimals
    for &(class, n, want) in refs::PROPORTION_SPOTS {
        let props = permlab::derange::derangement_proportions(&spec(class), n)
            .map_err(|e| fail(format!("{e}")))?;
        let got = permlab::series::rational_decimal(&props[n], 9);
        if got != want {
            return Err(format!("proportion of Av({class}) at {n}: {got} ≠ {want}"));
        }
    }
    Ok("231: …,303,986 and 123: …,725,2538 through length 9; proportions spot-checked".into())
}

// 4. Joint distributions agree; strict inequalities hold.
fn check_distributions() -> Result<String, String> {
    let d132 = fix_exc_distribution(&spec("132"), 9).map_err(|e| fail(format!("{e}")))?;
    let d321 = fix_exc_distribution(&spec("321"), 9).map_err(|e| fail(format!("{e}")))?;
    if d132 != d321 {
        return Err("joint fix/exc tables of Av(132) and Av(321) differ".into());
    }
    let c231 = derangement_counts(&spec("231"), 9).map_err(|e| fail(format!("{e}")))?;
    let c132 = derangement_counts(&spec("132"), 9).map_err(|e| fail(format!("{e}")))?;
    let c123 = derangement_counts(&spec("123"), 9).map_err(|e| fail(format!("{e}")))?;
    for n in 3..=9 {
        if c231.terms()[n] >= c132.terms()[n] {
            return Err(format!("231-avoiding ≥ 132-avoiding derangements at {n}"));
        }
    }
    for n in 4..=9 {
        if c123.terms()[n] <= c132.terms()[n] {
            return Err(format!("123-avoiding ≤ 132-avoiding derangements at {n}"));
        }
    }
    Ok("tables identical through 9; both strict inequalities hold".into())
}

// 5. Separable permutations: totals, derangements, DP = brute force.
fn check_separable() -> Result<String, String> {
    let report = separable_displacement_dp(9).map_err(|e| fail(format!("{e}")))?;
    seq_matches(&report.totals, &refs::SCHROEDER, 9)?;
    seq_matches(&report.derangements, &refs::SEPARABLE_DERANGEMENTS, 9)?;
    let brute = separable_profile_brute(9).map_err(|e| fail(format!("{e}")))?;
    for n in 0..=9 {
        let dp_layer: std::collections::BTreeMap<_, _> = report.profile[n]
            .iter()
            .map(|(d, c)| (*d, c.total))
            .collect();
        if dp_layer != brute[n] {
            return Err(format!("profile mismatch with brute force at length {n}"));
        }
    }
    Ok("Schröder totals, A393394 derangements, full profile agreement to 9".into())
}

// 6. Table of symmetry classes and candidate Wilf classes.
fn check_symmetry_wilf() -> Result<String, String> {
    let sizes: Vec<u64> = (1..=7)
        .map(|n| symmetry_classes(n).map(|o| o.len() as u64))
        .collect::<Result<_, _>>()
        .map_err(|e| fail(format!("{e}")))?;
    if sizes != refs::SYMMETRY_CLASSES.terms {
        return Err(format!("symmetry class counts {sizes:?}"));
    }
    let mut wilf_counts = Vec::new();
    for n in 1..=4 {
        let c = wilf_classify(n, 9).map_err(|e| fail(format!("{e}")))?;
        wilf_counts.push(c.classes.len() as u64);
    }
    if wilf_counts != refs::WILF_CLASSES.terms[..4] {
        return Err(format!("candidate Wilf class counts {wilf_counts:?}"));
    }
    Ok("symmetry classes 1,1,2,7,23,115,694; candidate Wilf classes 1,1,1,3 at depth 9".into())
}

// 7. g_1(β) = |β|² + 1 and the Ray–West j range, all |β| ≤ 5.
fn check_gk() -> Result<String, String> {
    let betas: Vec<Permutation> = (1..=5).flat_map(Permutation::all).collect();
    let problems: Vec<String> = betas
        .par_iter()
        .filter_map(|beta| {
            let m = beta.len();
            match g_k(beta, 1) {
                Ok(g1) if g1 == BigUint::from(m * m + 1) => {}
                Ok(g1) => return Some(format!("g_1({beta}) = {g1}")),
                Err(e) => return Some(format!("g_1({beta}): {e}")),
            }
            match ray_west_j(beta) {
                Ok(_) => None,
                Err(e) => Some(format!("j({beta}): {e}")),
            }
        })
        .collect();
    if let Some(first) = problems.first() {
        return Err(first.clone());
    }
    Ok(format!(
        "g_1 = m²+1 and j ∈ [0, m−1] for all {} patterns",
        betas.len()
    ))
}

// 8. Shape-Wilf equivalences and dominance on every admissible shape with
// at most 7 columns.
fn check_shape_wilf() -> Result<String, String> {
    let patterns = ["12", "21", "123", "321", "213", "231", "312", "132"];
    let mut shapes_checked = 0u64;
    for n in 1..=7 {
        let shapes = FerrersShape::admissible(n);
        shapes_checked += shapes.len() as u64;
        let problems: Vec<String> = shapes
            .par_iter()
            .filter_map(|shape| {
                let mut counts = std::collections::HashMap::new();
                for pat in patterns {
                    match count_avoiding_frps(shape, &p(pat)) {
                        Ok(c) => {
                            counts.insert(pat, c);
                        }
                        Err(e) => return Some(format!("{shape}: {e}")),
                    }
                }
                if counts["12"] != counts["21"] {
                    return Some(format!("{shape}: 12 vs 21"));
                }
                if counts["123"] != counts["321"] || counts["123"] != counts["213"] {
                    return Some(format!("{shape}: 123/321/213"));
                }
                if counts["231"] != counts["312"] {
                    return Some(format!("{shape}: 231 vs 312"));
                }
                if !(counts["132"] >= counts["321"] && counts["321"] >= counts["231"]) {
                    return Some(format!("{shape}: dominance"));
                }
                None
            })
            .collect();
        if let Some(first) = problems.first() {
            return Err(first.clone());
        }
    }
    // 132 sits alone: it separates from both other classes
    let vs_231 = shape_wilf_probe(&p("132"), &p("231"), 5).map_err(|e| fail(format!("{e}")))?;
    let vs_123 = shape_wilf_probe(&p("132"), &p("123"), 5).map_err(|e| fail(format!("{e}")))?;
    if vs_231.separating_shape.is_none() || vs_123.separating_shape.is_none() {
        return Err("132 failed to separate from a supposed non-equivalent class".into());
    }
    Ok(format!(
        "{shapes_checked} shapes: 12≡21, 123≡321≡213, 231≡312, dominance; 132 separates"
    ))
}

// 9. The ⊕1 separation at length 8, and the unbalanced equivalence.
fn check_separations() -> Result<String, String> {
    let sep = oplus_one_separator(&p("1342"), &p("2413"), 8).map_err(|e| fail(format!("{e}")))?;
    if sep != Some(8) {
        return Err(format!("separator reported {sep:?}, expected length 8"));
    }
    let unbalanced = count_av(&spec("1324/3416725"), 10).map_err(|e| fail(format!("{e}")))?;
    let single = count_av(&spec("1234"), 10).map_err(|e| fail(format!("{e}")))?;
    if unbalanced != single {
        return Err("Av(1324, 3416725) and Av(1234) counts differ within length 10".into());
    }
    Ok("1342⊕1/2413⊕1 split exactly at length 8; unbalanced equivalence holds to 10".into())
}

// 10. Two stacks in series.
fn check_two_stacks() -> Result<String, String> {
    let two = SeriesMachine::plain(2).map_err(|e| fail(format!("{e}")))?;
    if two
        .sorts(&p("2435761"), DEFAULT_BUDGET)
        .map_err(|e| fail(format!("{e}")))?
    {
        return Err("2435761 reported sortable by two stacks".into());
    }
    let av231 = spec("231");
    for n in 0..=8usize {
        let sortable: Vec<Permutation> = {
            let perms: Vec<Permutation> = Permutation::all(n).collect();
            let verdicts: Vec<Result<bool, _>> = perms
                .par_iter()
                .map(|q| two.sorts(q, DEFAULT_BUDGET))
                .collect();
            let mut out = Vec::new();
            for (q, v) in perms.into_iter().zip(verdicts) {
                if v.map_err(|e| fail(format!("{e}")))? {
                    out.push(q);
                }
            }
            out
        };
        if n <= 6 && sortable.len() != (1..=n.max(1)).product::<usize>() {
            return Err(format!("not all of S_{n} sortable"));
        }
        let composed =
            class_compose_members(&av231, &av231, n).map_err(|e| fail(format!("{e}")))?;
        if sortable != composed {
            return Err(format!(
                "sortable set differs from Av(231)∘Av(231) at length {n}"
            ));
        }
    }
    let basis = minimal_basis(|q| two.sorts(q, DEFAULT_BUDGET), 8, false)
        .map_err(|e| fail(format!("{e}")))?;
    let sizes: Vec<usize> = basis.iter().map(Vec::len).collect();
    if sizes[..7].iter().any(|&s| s != 0) {
        return Err("unexpected basis element below length 7".into());
    }
    if sizes[7] != 22 || sizes[8] != 51 {
        return Err(format!(
            "basis sizes at 7, 8: {}, {} (expected 22, 51)",
            sizes[7], sizes[8]
        ));
    }
    Ok("S_6 sortable; 2435761 not; basis 22@7, 51@8; equals Av(231)∘Av(231) to 8".into())
}

// 11. West characterization over all of S_n, n ≤ 9.
fn check_west() -> Result<String, String> {
    let forbidden = p("2341");
    for n in 0..=9usize {
        const BATCH: usize = 1 << 14;
        let mut iter = Permutation::all(n);
        loop {
            let batch: Vec<Permutation> = iter.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            let bad = batch.par_iter().find_any(|q| {
                let west = west_sortable(q, 2);
                let class = !permlab::perm::contains(&forbidden, q) && avoids_barred_35241(q);
                west != class
            });
            if let Some(q) = bad {
                return Err(format!("characterization fails at {q}"));
            }
        }
    }
    Ok("equivalence holds for all 409,114 permutations of length ≤ 9".into())
}

// 12. The (2,2)-stack.
fn check_stack22() -> Result<String, String> {
    let rs = RsStack::new(2, 2).map_err(|e| fail(format!("{e}")))?;
    // counts on S_n, n ≤ 6
    let mut direct = Vec::new();
    for n in 1..=6usize {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let count = perms
            .par_iter()
            .map(|q| rs.sorts(q, DEFAULT_BUDGET).map(u64::from))
            .try_reduce(|| 0, |a, b| Ok(a + b))
            .map_err(|e| fail(format!("{e}")))?;
        direct.push(count);
    }
    if direct != refs::STACK22_SORTABLE.terms[..6] {
        return Err(format!("direct counts {direct:?}"));
    }
    // minimal basis through length 6
    let basis = minimal_basis(|q| rs.sorts(q, DEFAULT_BUDGET), 6, false)
        .map_err(|e| fail(format!("{e}")))?;
    let flat: Vec<String> = basis.iter().flatten().map(|b| b.to_string()).collect();
    let mut expected: Vec<String> = refs::STACK22_BASIS.iter().map(|s| s.to_string()).collect();
    expected.sort_by_key(|s| (s.len(), s.clone()));
    if flat != expected {
        return Err(format!("basis through 6: {flat:?}"));
    }
    for b in refs::STACK22_BASIS {
        let dual = p(b).sorting_dual().to_string();
        if !refs::STACK22_BASIS.contains(&dual.as_str()) {
            return Err(format!("basis not closed under sorting dual at {b}"));
        }
    }
    // machine-computed series through length 10, with the constant term
    let counts = count_class_by_oracle(|q| rs.sorts(q, DEFAULT_BUDGET), 10)
        .map_err(|e| fail(format!("{e}")))?;
    seq_matches(&counts, &refs::STACK22_SORTABLE, 10)?;
    let residual = algebraic_residual(&BivariatePoly::stack22_minimal(), &counts)
        .map_err(|e| fail(format!("{e}")))?;
    if residual.checked_through < 10 {
        return Err("series too short for the order-10 residual check".into());
    }
    if let Some(k) = residual.first_nonzero_order {
        return Err(format!("residual fails to vanish at order {k}"));
    }
    Ok(format!(
        "counts 1,2,6,24,116,628; Atkinson basis; dual-closed; residual vanishes through order {}",
        residual.checked_through
    ))
}

// 13. Basis theorem for every container basis inside S_3.
fn check_cmachines() -> Result<String, String> {
    // all subsets of the six length-3 patterns with 1 to 3 elements
    fn push_combos(
        s3: &[Permutation],
        size: usize,
        start: usize,
        cur: &mut Vec<Permutation>,
        out: &mut Vec<Vec<Permutation>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..s3.len() {
            cur.push(s3[i].clone());
            push_combos(s3, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let s3: Vec<Permutation> = Permutation::all(3).collect();
    let mut bases: Vec<Vec<Permutation>> = Vec::new();
    for size in 1..=3usize {
        let mut cur = Vec::new();
        push_combos(&s3, size, 0, &mut cur, &mut bases);
    }
    let total = bases.len();
    let problems: Vec<String> = bases
        .par_iter()
        .filter_map(|basis| {
            let container = ClassSpec::new(basis.clone());
            let searched = match c_machine_class(&container, 1, 7, DEFAULT_BUDGET) {
                Ok(v) => v,
                Err(e) => return Some(format!("{container}: {e}")),
            };
            let predicted = match basis_theorem_class(&container, 7) {
                Ok(v) => v,
                Err(e) => return Some(format!("{container}: {e}")),
            };
            if searched != predicted {
                return Some(format!("{container}: searched class ≠ Av(1⊖B)"));
            }
            None
        })
        .collect();
    if let Some(first) = problems.first() {
        return Err(first.clone());
    }
    // the two classical machines
    let stack = CMachine::new(spec("12"), 1).map_err(|e| fail(format!("{e}")))?;
    let queueish = CMachine::new(spec("21"), 1).map_err(|e| fail(format!("{e}")))?;
    let av312 = spec("312");
    let av321 = spec("321");
    for n in 0..=7usize {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let bad = perms
            .par_iter()
            .find_any(|q| {
                stack.generates(q, DEFAULT_BUDGET).unwrap_or(false) != av312.avoids(q)
                    || queueish.generates(q, DEFAULT_BUDGET).unwrap_or(false) != av321.avoids(q)
            });
        if let Some(q) = bad {
            return Err(format!("classical machine mismatch at {q}"));
        }
    }
    Ok(format!(
        "all {total} bases in S_3 match Av(1⊖B) to length 7; Av(12)→Av(312), Av(21)→Av(321)"
    ))
}

// 14. Priority queues.
fn check_priority_queues() -> Result<String, String> {
    for n in 1..=5usize {
        let pairs = pq_pairs_count(n).map_err(|e| fail(format!("{e}")))?;
        let cayley = ((n + 1) as u64).pow(n as u32 - 1);
        if pairs != cayley {
            return Err(format!("pairs({n}) = {pairs}, expected {cayley}"));
        }
    }
    for n in 0..=8usize {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let bad = perms.par_iter().find_any(|q| {
            let drop = q.statistics().max_drop;
            (1..=4usize).any(|k| bounded_pq_sortable(q, k + 1) != (drop <= k))
        });
        if let Some(q) = bad {
            return Err(format!("bounded sorting mismatch at {q}"));
        }
    }
    Ok("pairs follow (n+1)^(n−1) to n=5; capacity k+1 sorts exactly max-drop ≤ k to n=8".into())
}

// 15. Stieltjes diagnostics.
fn check_stieltjes() -> Result<String, String> {
    let catalan = CountingSequence::catalan(24);
    let cf = stieltjes_cf(&catalan).map_err(|e| fail(format!("{e}")))?;
    if cf.breakdown_index.is_some() {
        return Err("Catalan continued fraction broke down".into());
    }
    if cf.alphas.len() < 11 || cf.alphas[..11].iter().any(|a| !a.is_one()) {
        return Err("Catalan alphas are not all 1".into());
    }
    let hankel = hankel_report(&catalan, 8).map_err(|e| fail(format!("{e}")))?;
    if hankel
        .determinants
        .iter()
        .chain(&hankel.shifted_determinants)
        .any(|d| !d.is_one())
    {
        return Err("Catalan Hankel minors are not all 1".into());
    }
    // the container-machine class with a poorly behaved generating function
    let counts = count_av(&spec("4231/4123/4312"), 11).map_err(|e| fail(format!("{e}")))?;
    let hankel = hankel_report(&counts, 6).map_err(|e| fail(format!("{e}")))?;
    let cf = stieltjes_cf(&counts).map_err(|e| fail(format!("{e}")))?;
    let negative_minor = hankel.first_negative_order;
    let alpha_trouble = cf.breakdown_index.is_some()
        || cf.alphas.iter().any(num_traits::Signed::is_negative);
    if negative_minor.is_none() && !alpha_trouble {
        return Err("no negative Hankel minor and no alpha trouble within 11 terms".into());
    }
    Ok(format!(
        "Catalan: unit minors, unit alphas; Av(4231,4123,4312): negative minor at order {:?}, CF breakdown at {:?}",
        negative_minor, cf.breakdown_index
    ))
}

// 16. Conjecture surveys.
fn check_surveys() -> Result<String, String> {
    let downsets = survey_downset_unimodality(10).map_err(|e| fail(format!("{e}")))?;
    if !downsets.counterexamples.is_empty() {
        let c = &downsets.counterexamples[0];
        return Err(format!(
            "non-unimodal downset found: {} with ranks {}",
            c.permutation, c.ranks
        ));
    }
    if !downsets.first_half_violations.is_empty() {
        let c = &downsets.first_half_violations[0];
        return Err(format!(
            "first-half increase violated at {} with ranks {}",
            c.permutation, c.ranks
        ));
    }
    let sampled =
        survey_downset_unimodality_sampled(11, 2000, 0x5eed).map_err(|e| fail(format!("{e}")))?;
    if !sampled.counterexamples.is_empty() || !sampled.first_half_violations.is_empty() {
        return Err("downset shape violation in the length-11 sample".into());
    }
    let comps = survey_composition_subword(18).map_err(|e| fail(format!("{e}")))?;
    if !comps.counterexamples.is_empty() {
        let (w, ranks) = &comps.counterexamples[0];
        return Err(format!("non-unimodal composition downset: {w} with {ranks}"));
    }
    let gn = survey_gn_minus_one(11).map_err(|e| fail(format!("{e}")))?;
    if !gn.odd_all_zero {
        return Err("G_n(−1) ≠ 0 for some odd n ≤ 11".into());
    }
    Ok(format!(
        "downsets to 10 ({} scanned) + sample at 11, compositions to 18 ({}), odd G_n(−1) all zero",
        downsets.scanned, comps.scanned
    ))
}
