//! `permlab`: exact computations with permutation patterns from the command
//! line. Results print as JSON by default (`--format csv` for tables);
//! exit code 0 on success, 1 on a computation error, 2 on a usage error.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use permlab::boards::{
    count_avoiding_frps, frp_contains, frps, oplus_one_separator, shape_wilf_probe,
    stankova_dominance, FerrersShape, FullRookPlacement,
};
use permlab::classes::{
    count_av, count_class_by_oracle, g_k, minimal_basis, ray_west_j, symmetry_classes,
    wilf_classify, ClassSpec,
};
use permlab::derange::{
    derangement_counts, derangement_proportions, fix_exc_distribution, g_polynomials_123,
    separable_displacement_dp, survey_gn_minus_one,
};
use permlab::machines::{
    amr_ordered_basis_instance, avoids_barred_35241, bounded_pq_sortable, c_machine_class,
    greedy_stack_sort, pq_pairs_count, pq_transformable, sorting_generating_bridge,
    two_ordered_stacks_report, west_sortable, CMachine, RsStack, SeriesMachine, DEFAULT_BUDGET,
};
use permlab::order::{
    comp_contains, comp_downset_enumerate, comp_downset_rank, composition_to_layered,
    interval_rank_sequence, layered_to_composition, partition_downset_rank, pattern_downset,
    pattern_downset_ranks, sagan_polynomial, shape_profile, survey_composition_subword,
    survey_downset_unimodality, survey_downset_unimodality_sampled, Composition,
    CompositionOrder, Partition,
};
use permlab::perm::{contains, occurrences, Permutation, Symmetry};
use permlab::poly::BivariatePoly;
use permlab::series::{
    algebraic_residual, hankel_report, rational_decimal, ratio_profile, stieltjes_cf,
    CountingSequence,
};

use permlab_cli::output::{render, Format};
use permlab_cli::{cache, verify};

#[derive(Parser)]
#[command(
    name = "permlab",
    version,
    about = "Exact computations with permutation patterns",
    max_term_width = 100
)]
struct Cli {
    /// Output format for results on stdout.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Worker threads for parallel enumerations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Skip the on-disk result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pattern containment tests and occurrence listing.
    Contains {
        /// Pattern permutation, e.g. 32514.
        #[arg(long)]
        pattern: String,
        /// Host permutation, e.g. 362957184.
        #[arg(long)]
        host: String,
        /// List every occurrence as 1-based index tuples.
        #[arg(long)]
        occurrences: bool,
        /// Apply a symmetry to both before testing.
        #[arg(long)]
        symmetry: Option<String>,
    },
    /// Principal downset of a permutation: rank sequence and shape flags.
    Downset {
        #[arg(long)]
        perm: String,
        /// Also list the patterns at each rank.
        #[arg(long)]
        members: bool,
    },
    /// Rank sequence of the interval [lower, upper] in the pattern order.
    Interval {
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
    },
    /// Compositions: containment, downset ranks, Sagan polynomial, layered
    /// bridge.
    Comp {
        /// Composition, e.g. 3,1,4. Alternatively derive it from a layered
        /// permutation with --from-perm.
        #[arg(long, required_unless_present = "from_perm")]
        comp: Option<String>,
        /// Layered permutation whose layer composition is wanted.
        #[arg(long)]
        from_perm: Option<String>,
        /// subword or componentwise.
        #[arg(long, default_value = "subword")]
        order: String,
        /// Test containment of this composition in --comp.
        #[arg(long)]
        contained: Option<String>,
        /// Print the componentwise rank-generating polynomial.
        #[arg(long)]
        sagan: bool,
        /// List the downset members by rank (small sums only).
        #[arg(long)]
        members: bool,
        /// Print the corresponding layered permutation.
        #[arg(long)]
        layered: bool,
    },
    /// Rank sequence of a partition's downset in Young's lattice.
    Partition {
        /// Weakly decreasing parts, e.g. 8,8,4,4.
        #[arg(long)]
        shape: String,
    },
    /// Candidate Wilf classification of S_n at a counting depth.
    Wilf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: usize,
    },
    /// Symmetry classes of S_n under the dihedral action.
    Symclasses {
        #[arg(long)]
        n: usize,
        /// List orbit members, not just counts.
        #[arg(long)]
        members: bool,
    },
    /// g_k statistics: permutations of length |beta|+k containing beta.
    Gk {
        /// Pattern; omit to tabulate all patterns of --len.
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Tabulate g_1, g_2, and the Ray–West j for every pattern of this
        /// length.
        #[arg(long)]
        len: Option<usize>,
    },
    /// Ferrers boards and full rook placements.
    Frp {
        /// Column heights, e.g. 4,4,3,2.
        #[arg(long)]
        shape: String,
        /// List all full rook placements.
        #[arg(long)]
        list: bool,
        /// Count placements avoiding this pattern.
        #[arg(long)]
        avoid: Option<String>,
        /// Test whether the placement given by these rook rows contains
        /// --avoid.
        #[arg(long)]
        rows: Option<String>,
    },
    /// Shape-Wilf equivalence probing and Stankova dominance.
    Swe {
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: Option<String>,
        /// Probe all admissible shapes with up to this many columns.
        #[arg(long, default_value_t = 6)]
        max_cols: usize,
        /// Report the 132/321/231 dominance counts on one shape.
        #[arg(long)]
        stankova: Option<String>,
        /// Least length where Av(beta⊕1) and Av(gamma⊕1) counts differ.
        #[arg(long)]
        oplus_separator: bool,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Derangements in an avoidance class.
    Derange {
        /// Basis, slash-separated: 132 or 2413/3142.
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// Joint fixed-point/excedance table per length.
        #[arg(long)]
        distribution: bool,
        /// Exact proportions of derangements per length.
        #[arg(long)]
        proportions: bool,
        /// G_n(t) over 123-avoiding derangements (requires --class=123).
        #[arg(long)]
        g_polynomial: bool,
    },
    /// Separable permutations: displacement profile and derangements.
    Separable {
        #[arg(long)]
        n: usize,
        /// Include the per-set displacement profile.
        #[arg(long)]
        profile: bool,
    },
    /// Sequence diagnostics (exact arithmetic).
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Sorting machines.
    #[command(subcommand)]
    Sort(SortCommand),
    /// Conjecture surveys: scan a range, report counterexample candidates.
    #[command(subcommand)]
    Survey(SurveyCommand),
    /// Run the embedded verification suite.
    Verify {
        /// Which suite to run (only "paper" exists).
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Run a single check by id, e.g. c12.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct SeqInput {
    /// Comma-separated terms, indexed from 0.
    #[arg(long)]
    terms: Option<String>,
    /// File with one integer per line ('#' comments); "-" for stdin.
    #[arg(long)]
    file: Option<String>,
    /// Built-in: catalan:N for the first N Catalan numbers.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Leading principal minors of the Hankel matrices.
    Hankel {
        #[command(flatten)]
        input: SeqInput,
        #[arg(long)]
        order: usize,
    },
    /// Stieltjes continued-fraction coefficients.
    Cf {
        #[command(flatten)]
        input: SeqInput,
    },
    /// Residual of an algebraic equation P(x, f) on the truncated series.
    Residual {
        #[command(flatten)]
        input: SeqInput,
        /// Terms coef,xexp,fexp separated by ';', or the name stack22.
        #[arg(long)]
        poly: String,
    },
    /// Termwise exact ratios of two sequences.
    Ratio {
        /// Numerator terms, comma-separated.
        #[arg(long)]
        numer: String,
        /// Denominator terms, comma-separated.
        #[arg(long)]
        denom: String,
        /// Decimal digits for rendering.
        #[arg(long, default_value_t = 9)]
        digits: usize,
    },
}

#[derive(Subcommand)]
enum SortCommand {
    /// t stacks in series (optionally ordered), exhaustive operation search.
    Series {
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, required_unless_present = "basis_to")]
        perm: Option<String>,
        #[arg(long)]
        ordered: bool,
        /// Ask for generation (identity in, perm out) instead of sorting.
        #[arg(long)]
        generate: bool,
        /// Print a replayable operation sequence witness when sortable.
        #[arg(long)]
        witness: bool,
        /// Compute the minimal basis of the sortable class through this
        /// length instead of testing one permutation.
        #[arg(long)]
        basis_to: Option<usize>,
        /// Also report the sort/generate duality checks for the permutation.
        #[arg(long)]
        bridge: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Atkinson (r,s)-stack.
    Rs {
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long)]
        generate: bool,
        /// Count sortable permutations per length up to this bound.
        #[arg(long)]
        count_to: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Restricted container (C-machine) with s-wide pops.
    Cmachine {
        /// Container basis, slash-separated.
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long)]
        perm: Option<String>,
        /// Sort instead of the default generate.
        #[arg(long)]
        sort: bool,
        /// Enumerate the generated class per length up to this bound.
        #[arg(long)]
        class_to: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Priority queues: bounded sorting and transformable pairs.
    Pq {
        #[arg(long)]
        perm: Option<String>,
        /// Capacity bound; omit for unlimited.
        #[arg(long)]
        capacity: Option<usize>,
        /// Target permutation for transformation.
        #[arg(long)]
        into: Option<String>,
        /// Count transformable pairs of this length.
        #[arg(long)]
        pairs: Option<usize>,
    },
    /// West iterated greedy stack sorting.
    West {
        #[arg(long)]
        perm: String,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Two ordered stacks vs Av(1342), and the basis family instances.
    Ordered1342 {
        #[arg(long, default_value_t = 7)]
        max_len: usize,
        /// Emit the length-2k basis family instance instead.
        #[arg(long)]
        family_k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Args)]
struct SurveyOut {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum SurveyCommand {
    /// Rank-unimodality of principal downsets of permutations.
    DownsetUnimodality {
        #[command(flatten)]
        report: SurveyOut,
        #[arg(long, default_value_t = 9)]
        max_len: usize,
        /// Additionally sample this many random permutations of this length.
        #[arg(long)]
        sample_len: Option<usize>,
        #[arg(long, default_value_t = 2000)]
        sample_count: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Rank-unimodality of subword-order composition downsets.
    CompositionSubword {
        #[command(flatten)]
        report: SurveyOut,
        #[arg(long, default_value_t = 18)]
        max_sum: u32,
    },
    /// Signs of G_n(−1) over 123-avoiding derangements.
    GnMinusOne {
        #[command(flatten)]
        report: SurveyOut,
        #[arg(long, default_value_t = 11)]
        max_n: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: could not size the thread pool: {e}");
            std::process::exit(2);
        }
    }
    match dispatch(cli.command, cli.no_cache) {
        Ok(Some(value)) => {
            println!("{}", render(&value, format));
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

type CmdResult = Result<Option<Value>, Box<dyn std::error::Error>>;

fn parse_perm(s: &str) -> Result<Permutation, permlab::Error> {
    s.parse()
}

fn counting_to_json(seq: &CountingSequence) -> Value {
    Value::Array(
        seq.terms()
            .iter()
            .map(|t| Value::String(t.to_string()))
            .collect(),
    )
}

fn ranks_to_json(counts: &[num_bigint::BigUint]) -> Value {
    Value::Array(
        counts
            .iter()
            .map(|t| Value::String(t.to_string()))
            .collect(),
    )
}

fn profile_json(counts: &[num_bigint::BigUint]) -> Value {
    let p = shape_profile(counts);
    json!({
        "unimodal": p.unimodal,
        "log_concave": p.log_concave,
        "log_convex_from_1": p.log_convex_from_1,
        "first_half_increasing": p.first_half_increasing,
    })
}

fn dispatch(command: Command, no_cache: bool) -> CmdResult {
    match command {
        Command::Contains {
            pattern,
            host,
            occurrences: list,
            symmetry,
        } => {
            let mut pat = parse_perm(&pattern)?;
            let mut hst = parse_perm(&host)?;
            if let Some(sym) = symmetry {
                let sym: Symmetry = sym.parse()?;
                pat = pat.apply_symmetry(sym);
                hst = hst.apply_symmetry(sym);
            }
            let mut out = json!({
                "pattern": pat.to_string(),
                "host": hst.to_string(),
                "contains": contains(&pat, &hst),
            });
            if list {
                out["occurrences"] = json!(occurrences(&pat, &hst));
            }
            Ok(Some(out))
        }
        Command::Downset { perm, members } => {
            let pi = parse_perm(&perm)?;
            let ranks = pattern_downset_ranks(&pi)?;
            let mut out = json!({
                "perm": pi.to_string(),
                "ranks": ranks_to_json(ranks.counts()),
                "profile": profile_json(ranks.counts()),
            });
            if members {
                let levels = pattern_downset(&pi)?;
                out["members"] = json!(levels
                    .iter()
                    .map(|level| level.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>());
            }
            Ok(Some(out))
        }
        Command::Interval { lower, upper } => {
            let sigma = parse_perm(&lower)?;
            let pi = parse_perm(&upper)?;
            let ranks = interval_rank_sequence(&sigma, &pi)?;
            Ok(Some(json!({
                "lower": sigma.to_string(),
                "upper": pi.to_string(),
                "ranks": ranks_to_json(ranks.counts()),
                "profile": profile_json(ranks.counts()),
            })))
        }
        Command::Comp {
            comp,
            from_perm,
            order,
            contained,
            sagan,
            members,
            layered,
        } => {
            let w: Composition = match (&comp, &from_perm) {
                (Some(c), _) => c.parse()?,
                (None, Some(perm)) => layered_to_composition(&parse_perm(perm)?)?,
                (None, None) => return Err("need --comp or --from-perm".into()),
            };
            let ord: CompositionOrder = order.parse()?;
            let mut out = json!({
                "comp": w.to_string(),
                "order": ord.name(),
            });
            if let Some(u) = contained {
                let u: Composition = u.parse()?;
                out["contained"] = json!(comp_contains(&u, &w, ord));
                out["inner"] = json!(u.to_string());
            } else {
                let ranks = comp_downset_rank(&w, ord)?;
                out["ranks"] = ranks_to_json(ranks.counts());
                out["profile"] = profile_json(ranks.counts());
            }
            if sagan {
                out["sagan_polynomial"] = json!(sagan_polynomial(&w).to_string());
            }
            if members {
                let levels = comp_downset_enumerate(&w, ord)?;
                out["members"] = json!(levels
                    .iter()
                    .map(|level| level.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>());
            }
            if layered {
                out["layered"] = json!(composition_to_layered(&w).to_string());
            }
            Ok(Some(out))
        }
        Command::Partition { shape } => {
            let lambda: Partition = shape.parse()?;
            let ranks = partition_downset_rank(&lambda)?;
            Ok(Some(json!({
                "partition": lambda.to_string(),
                "ranks": ranks_to_json(ranks.counts()),
                "profile": profile_json(ranks.counts()),
            })))
        }
        Command::Wilf { n, depth } => {
            let params = format!("n={n},depth={depth}");
            let value = cache::with_cache(no_cache, "wilf", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                let report = wilf_classify(n, depth)?;
                Ok(json!({
                    "n": n,
                    "depth": depth,
                    "label": "candidate Wilf classes (count equality is necessary, not sufficient)",
                    "class_count": report.classes.len(),
                    "classes": report
                        .classes
                        .iter()
                        .map(|(members, seq)| json!({
                            "representatives": members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                            "counts": counting_to_json(seq),
                        }))
                        .collect::<Vec<_>>(),
                }))
            })?;
            Ok(Some(value))
        }
        Command::Symclasses { n, members } => {
            let orbits = symmetry_classes(n)?;
            let mut out = json!({
                "n": n,
                "class_count": orbits.len(),
            });
            if members {
                out["classes"] = json!(orbits
                    .iter()
                    .map(|o| o.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>());
            }
            Ok(Some(out))
        }
        Command::Gk { beta, k, len } => {
            if let Some(m) = len {
                let rows: Vec<Value> = Permutation::all(m)
                    .map(|b| -> Result<Value, permlab::Error> {
                        Ok(json!({
                            "beta": b.to_string(),
                            "g1": g_k(&b, 1)?.to_string(),
                            "g2": g_k(&b, 2)?.to_string(),
                            "ray_west_j": ray_west_j(&b)?.to_string(),
                        }))
                    })
                    .collect::<Result<_, _>>()?;
                return Ok(Some(Value::Array(rows)));
            }
            let b = parse_perm(&beta.ok_or("need --beta or --len")?)?;
            let value = g_k(&b, k)?;
            let mut out = json!({
                "beta": b.to_string(),
                "k": k,
                "g_k": value.to_string(),
            });
            if k == 2 {
                out["ray_west_j"] = json!(ray_west_j(&b)?.to_string());
            }
            Ok(Some(out))
        }
        Command::Frp {
            shape,
            list,
            avoid,
            rows,
        } => {
            let sh: FerrersShape = shape.parse()?;
            let mut out = json!({
                "shape": sh.to_string(),
                "admissible": sh.admits_full_placement(),
            });
            if let (Some(beta), Some(rows)) = (&avoid, &rows) {
                let beta = parse_perm(beta)?;
                let rook_rows = parse_perm(rows)?;
                let placement = FullRookPlacement::new(sh.clone(), rook_rows.values().to_vec())?;
                out["rows"] = json!(rows);
                out["contains"] = json!(frp_contains(&placement, &beta));
                out["pattern"] = json!(beta.to_string());
                return Ok(Some(out));
            }
            if let Some(beta) = avoid {
                let beta = parse_perm(&beta)?;
                out["avoiding"] = json!(beta.to_string());
                out["count"] = json!(count_avoiding_frps(&sh, &beta)?.to_string());
            }
            if list {
                let all = frps(&sh)?;
                out["placements"] = json!(all
                    .iter()
                    .map(|r| r.as_permutation().to_string())
                    .collect::<Vec<_>>());
                out["count_all"] = json!(all.len());
            }
            Ok(Some(out))
        }
        Command::Swe {
            beta,
            gamma,
            max_cols,
            stankova,
            oplus_separator,
            max_len,
        } => {
            let b = parse_perm(&beta)?;
            if let Some(shape) = stankova {
                let sh: FerrersShape = shape.parse()?;
                let report = stankova_dominance(&sh)?;
                return Ok(Some(json!({
                    "shape": sh.to_string(),
                    "count_132": report.count_132.to_string(),
                    "count_321": report.count_321.to_string(),
                    "count_231": report.count_231.to_string(),
                    "dominance_holds": report.dominance_holds,
                })));
            }
            let g = parse_perm(&gamma.ok_or("need --gamma")?)?;
            if oplus_separator {
                let sep = oplus_one_separator(&b, &g, max_len)?;
                return Ok(Some(json!({
                    "beta": b.to_string(),
                    "gamma": g.to_string(),
                    "separating_length": sep,
                })));
            }
            let params = format!("beta={b},gamma={g},cols={max_cols}");
            let value = cache::with_cache(no_cache, "swe", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                let probe = shape_wilf_probe(&b, &g, max_cols)?;
                Ok(json!({
                    "beta": b.to_string(),
                    "gamma": g.to_string(),
                    "max_cols": max_cols,
                    "shapes_checked": probe.shapes_checked,
                    "equivalent_so_far": probe.equivalent_so_far,
                    "separating_shape": probe.separating_shape.as_ref().map(|(sh, cb, cg)| json!({
                        "shape": sh.to_string(),
                        "count_beta": cb.to_string(),
                        "count_gamma": cg.to_string(),
                    })),
                }))
            })?;
            Ok(Some(value))
        }
        Command::Derange {
            class,
            n,
            distribution,
            proportions,
            g_polynomial,
        } => {
            let spec = ClassSpec::parse(&class)?;
            let params = format!("class={spec},n={n},dist={distribution},prop={proportions},g={g_polynomial}");
            let value = cache::with_cache(no_cache, "derange", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                let counts = derangement_counts(&spec, n)?;
                let mut out = json!({
                    "class": spec.to_string(),
                    "n": n,
                    "derangements": counting_to_json(&counts),
                    "class_counts": counting_to_json(&count_av(&spec, n)?),
                });
                if distribution {
                    let dist = fix_exc_distribution(&spec, n)?;
                    out["fix_exc"] = json!(dist
                        .table
                        .iter()
                        .enumerate()
                        .map(|(len, table)| json!({
                            "length": len,
                            "cells": table
                                .iter()
                                .map(|((f, e), c)| json!({
                                    "fixed_points": f,
                                    "excedances": e,
                                    "count": c.to_string()
                                }))
                                .collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>());
                }
                if proportions {
                    let props = derangement_proportions(&spec, n)?;
                    out["proportions"] = json!(props
                        .iter()
                        .map(|r| rational_decimal(r, 9))
                        .collect::<Vec<_>>());
                }
                if g_polynomial {
                    if spec.basis() != [parse_perm("123")?] {
                        return Err("G_n(t) is defined over 123-avoiding derangements".into());
                    }
                    let polys = g_polynomials_123(n)?;
                    out["g_polynomials"] =
                        json!(polys.iter().map(|g| g.to_string()).collect::<Vec<_>>());
                }
                Ok(out)
            })?;
            Ok(Some(value))
        }
        Command::Separable { n, profile } => {
            let params = format!("n={n},profile={profile}");
            let value = cache::with_cache(no_cache, "separable", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                let report = separable_displacement_dp(n)?;
                let mut out = json!({
                    "n": n,
                    "totals": counting_to_json(&report.totals),
                    "derangements": counting_to_json(&report.derangements),
                });
                if profile {
                    out["profile"] = json!(report
                        .profile
                        .iter()
                        .enumerate()
                        .map(|(len, layer)| json!({
                            "length": len,
                            "sets": layer
                                .iter()
                                .map(|(d, c)| json!({
                                    "displacements": d.to_string(),
                                    "total": c.total,
                                    "sum_indecomposable": c.sum_indecomposable,
                                    "skew_indecomposable": c.skew_indecomposable,
                                }))
                                .collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>());
                }
                Ok(out)
            })?;
            Ok(Some(value))
        }
        Command::Seq(cmd) => seq_command(cmd),
        Command::Sort(cmd) => sort_command(cmd, no_cache),
        Command::Survey(cmd) => survey_command(cmd),
        Command::Verify { suite, only } => {
            if suite != "paper" {
                return Err(format!("unknown suite {suite:?}").into());
            }
            let outcomes = verify::run_suite(only.as_deref(), false);
            if outcomes.is_empty() {
                return Err("no check matched".into());
            }
            let failed: Vec<&str> = outcomes
                .iter()
                .filter(|o| !o.passed)
                .map(|o| o.id)
                .collect();
            if !failed.is_empty() {
                return Err(format!("checks failed: {}", failed.join(", ")).into());
            }
            Ok(None)
        }
    }
}

fn read_sequence(input: &SeqInput) -> Result<CountingSequence, Box<dyn std::error::Error>> {
    if let Some(terms) = &input.terms {
        let parts = terms
            .split(',')
            .map(|t| t.trim().parse::<num_bigint::BigUint>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("bad term: {e}"))?;
        return Ok(CountingSequence::new(parts));
    }
    if let Some(path) = &input.file {
        let text = if path == "-" {
            use std::io::Read;
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(path)?
        };
        return Ok(CountingSequence::parse_file(&text)?);
    }
    if let Some(builtin) = &input.builtin {
        if let Some(count) = builtin.strip_prefix("catalan:") {
            return Ok(CountingSequence::catalan(count.parse()?));
        }
        return Err(format!("unknown builtin {builtin:?}").into());
    }
    Err("need --terms, --file, or --builtin".into())
}

fn seq_command(cmd: SeqCommand) -> CmdResult {
    match cmd {
        SeqCommand::Hankel { input, order } => {
            let seq = read_sequence(&input)?;
            let report = hankel_report(&seq, order)?;
            Ok(Some(json!({
                "orders": (1..=order).collect::<Vec<_>>(),
                "determinants": report.determinants.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "shifted_determinants": report.shifted_determinants.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "first_negative_order": report.first_negative_order,
                "all_nonnegative": report.all_nonnegative(),
            })))
        }
        SeqCommand::Cf { input } => {
            let seq = read_sequence(&input)?;
            let cf = stieltjes_cf(&seq)?;
            Ok(Some(json!({
                "alphas": cf.alphas.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                "breakdown_index": cf.breakdown_index,
                "all_nonnegative": cf.all_nonnegative(),
            })))
        }
        SeqCommand::Residual { input, poly } => {
            let seq = read_sequence(&input)?;
            let poly = if poly == "stack22" {
                BivariatePoly::stack22_minimal()
            } else {
                BivariatePoly::parse_triples(&poly)?
            };
            let report = algebraic_residual(&poly, &seq)?;
            Ok(Some(json!({
                "polynomial": poly.to_string(),
                "checked_through": report.checked_through,
                "first_nonzero_order": report.first_nonzero_order,
                "vanishes": report.first_nonzero_order.is_none(),
            })))
        }
        SeqCommand::Ratio {
            numer,
            denom,
            digits,
        } => {
            let parse = |s: &str| -> Result<CountingSequence, Box<dyn std::error::Error>> {
                Ok(CountingSequence::new(
                    s.split(',')
                        .map(|t| t.trim().parse::<num_bigint::BigUint>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| format!("bad term: {e}"))?,
                ))
            };
            let ratios = ratio_profile(&parse(&numer)?, &parse(&denom)?)?;
            Ok(Some(json!(ratios
                .iter()
                .enumerate()
                .map(|(n, r)| json!({
                    "n": n,
                    "ratio": r.to_string(),
                    "decimal": rational_decimal(r, digits),
                }))
                .collect::<Vec<_>>())))
        }
    }
}

fn sort_command(cmd: SortCommand, no_cache: bool) -> CmdResult {
    match cmd {
        SortCommand::Series {
            t,
            perm,
            ordered,
            generate,
            witness,
            basis_to,
            bridge,
            budget,
        } => {
            let machine = if ordered {
                SeriesMachine::ordered(t)?
            } else {
                SeriesMachine::plain(t)?
            };
            if let Some(n_max) = basis_to {
                let params = format!("t={t},ordered={ordered},n={n_max}");
                let value =
                    cache::with_cache(no_cache, "series-basis", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                        let basis = minimal_basis(|q| machine.sorts(q, budget), n_max, false)?;
                        Ok(json!({
                            "machine": format!("{}{} stacks in series", t, if ordered { " ordered" } else { "" }),
                            "basis_sizes": basis.iter().map(Vec::len).collect::<Vec<_>>(),
                            "basis": basis
                                .iter()
                                .map(|level| level.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                        }))
                    })?;
                return Ok(Some(value));
            }
            let pi = parse_perm(&perm.ok_or("need --perm or --basis-to")?)?;
            let verdict = if generate {
                machine.generates(&pi, budget)?
            } else {
                machine.sorts(&pi, budget)?
            };
            let mut out = json!({
                "machine": format!("{}{} stacks in series", t, if ordered { " ordered" } else { "" }),
                "perm": pi.to_string(),
                "mode": if generate { "generate" } else { "sort" },
                "result": verdict,
            });
            if witness && !generate {
                let w = machine.sort_witness(&pi, budget)?;
                out["witness"] = match w {
                    Some(ops) => json!(ops.serialize()),
                    None => Value::Null,
                };
            }
            if bridge {
                let report = sorting_generating_bridge(&machine, &pi, budget)?;
                out["bridge"] = json!({
                    "sortable": report.sortable,
                    "inverse_generatable": report.inverse_generatable,
                    "dual_sortable": report.dual_sortable,
                    "propositions_hold": report.propositions_hold(),
                });
            }
            Ok(Some(out))
        }
        SortCommand::Rs {
            r,
            s,
            perm,
            generate,
            count_to,
            budget,
        } => {
            let machine = RsStack::new(r, s)?;
            if let Some(n_max) = count_to {
                let params = format!("r={r},s={s},n={n_max}");
                let value = cache::with_cache(no_cache, "rs-count", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                    let counts = count_class_by_oracle(|q| machine.sorts(q, budget), n_max)?;
                    Ok(json!({
                        "machine": format!("({r},{s})-stack"),
                        "sortable_counts": counting_to_json(&counts),
                    }))
                })?;
                return Ok(Some(value));
            }
            let pi = parse_perm(&perm.ok_or("need --perm or --count-to")?)?;
            let verdict = if generate {
                machine.generates(&pi, budget)?
            } else {
                machine.sorts(&pi, budget)?
            };
            Ok(Some(json!({
                "machine": format!("({r},{s})-stack"),
                "perm": pi.to_string(),
                "mode": if generate { "generate" } else { "sort" },
                "result": verdict,
            })))
        }
        SortCommand::Cmachine {
            basis,
            s,
            perm,
            sort,
            class_to,
            budget,
        } => {
            let container = ClassSpec::parse(&basis)?;
            let machine = CMachine::new(container.clone(), s)?;
            if let Some(n_max) = class_to {
                let params = format!("basis={container},s={s},n={n_max}");
                let value =
                    cache::with_cache(no_cache, "cmachine-class", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                        let levels = c_machine_class(&container, s, n_max, budget)?;
                        Ok(json!({
                            "machine": format!("({container}, {s})-machine"),
                            "counts": levels.iter().map(|l| l.len()).collect::<Vec<_>>(),
                            "members": levels
                                .iter()
                                .map(|l| l.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                                .collect::<Vec<_>>(),
                        }))
                    })?;
                return Ok(Some(value));
            }
            let pi = parse_perm(&perm.ok_or("need --perm or --class-to")?)?;
            let verdict = if sort {
                machine.sorts(&pi, budget)?
            } else {
                machine.generates(&pi, budget)?
            };
            Ok(Some(json!({
                "machine": format!("({container}, {s})-machine"),
                "perm": pi.to_string(),
                "mode": if sort { "sort" } else { "generate" },
                "result": verdict,
            })))
        }
        SortCommand::Pq {
            perm,
            capacity,
            into,
            pairs,
        } => {
            if let Some(n) = pairs {
                let count = pq_pairs_count(n)?;
                return Ok(Some(json!({
                    "n": n,
                    "transformable_pairs": count,
                    "cayley": ((n as u64) + 1).pow(n.max(1) as u32 - 1),
                })));
            }
            let pi = parse_perm(&perm.ok_or("need --perm or --pairs")?)?;
            if let Some(sigma) = into {
                let sigma = parse_perm(&sigma)?;
                return Ok(Some(json!({
                    "perm": pi.to_string(),
                    "into": sigma.to_string(),
                    "transformable": pq_transformable(&pi, &sigma),
                })));
            }
            let cap = capacity.unwrap_or(pi.len().max(1));
            Ok(Some(json!({
                "perm": pi.to_string(),
                "capacity": cap,
                "sortable": bounded_pq_sortable(&pi, cap),
                "max_drop": pi.statistics().max_drop,
            })))
        }
        SortCommand::West { perm, t } => {
            let pi = parse_perm(&perm)?;
            let mut passes = Vec::new();
            let mut q = pi.clone();
            for _ in 0..t {
                q = greedy_stack_sort(&q);
                passes.push(q.to_string());
            }
            Ok(Some(json!({
                "perm": pi.to_string(),
                "t": t,
                "passes": passes,
                "west_sortable": west_sortable(&pi, t),
                "avoids_2341": !contains(&parse_perm("2341")?, &pi),
                "avoids_barred_35241": avoids_barred_35241(&pi),
            })))
        }
        SortCommand::Ordered1342 {
            max_len,
            family_k,
            budget,
        } => {
            if let Some(k) = family_k {
                let member = amr_ordered_basis_instance(k)?;
                return Ok(Some(json!({
                    "k": k,
                    "basis_instance": member.to_string(),
                    "length": member.len(),
                })));
            }
            let params = format!("n={max_len}");
            let value = cache::with_cache(no_cache, "ordered1342", &params, || -> Result<Value, Box<dyn std::error::Error>> {
                let report = two_ordered_stacks_report(max_len, budget)?;
                Ok(json!({
                    "all_match": report.all_match,
                    "rows": report
                        .counts
                        .iter()
                        .map(|(n, sortable, av)| json!({
                            "n": n,
                            "ordered_2_stack_sortable": sortable,
                            "av_1342": av.to_string(),
                        }))
                        .collect::<Vec<_>>(),
                }))
            })?;
            Ok(Some(value))
        }
    }
}

fn survey_command(cmd: SurveyCommand) -> CmdResult {
    match cmd {
        SurveyCommand::DownsetUnimodality {
            report,
            max_len,
            sample_len,
            sample_count,
            seed,
        } => {
            let survey = survey_downset_unimodality(max_len)?;
            let mut out = json!({
                "max_len": max_len,
                "scanned": survey.scanned,
                "counterexamples": survey
                    .counterexamples
                    .iter()
                    .map(|c| json!({
                        "perm": c.permutation.to_string(),
                        "ranks": c.ranks.to_string(),
                    }))
                    .collect::<Vec<_>>(),
                "first_half_violations": survey
                    .first_half_violations
                    .iter()
                    .map(|c| c.permutation.to_string())
                    .collect::<Vec<_>>(),
            });
            if let Some(len) = sample_len {
                let sampled = survey_downset_unimodality_sampled(len, sample_count, seed)?;
                out["sample"] = json!({
                    "len": len,
                    "count": sampled.scanned,
                    "seed": seed,
                    "counterexamples": sampled
                        .counterexamples
                        .iter()
                        .map(|c| json!({
                            "perm": c.permutation.to_string(),
                            "ranks": c.ranks.to_string(),
                        }))
                        .collect::<Vec<_>>(),
                });
            }
            write_report(&report, &out)?;
            Ok(Some(out))
        }
        SurveyCommand::CompositionSubword { report, max_sum } => {
            let survey = survey_composition_subword(max_sum)?;
            let out = json!({
                "max_sum": max_sum,
                "scanned": survey.scanned,
                "counterexamples": survey
                    .counterexamples
                    .iter()
                    .map(|(w, ranks)| json!({
                        "comp": w.to_string(),
                        "ranks": ranks.to_string(),
                    }))
                    .collect::<Vec<_>>(),
            });
            write_report(&report, &out)?;
            Ok(Some(out))
        }
        SurveyCommand::GnMinusOne { report, max_n } => {
            let survey = survey_gn_minus_one(max_n)?;
            let out = json!({
                "max_n": max_n,
                "values": survey.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "odd_all_zero": survey.odd_all_zero,
                "even_signs_alternate": survey.even_signs_alternate(),
                "even_signs": survey.even_signs,
            });
            write_report(&report, &out)?;
            Ok(Some(out))
        }
    }
}

fn write_report(report: &SurveyOut, value: &Value) -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = &report.out {
        std::fs::write(path, format!("{value:#}\n"))?;
    }
    Ok(())
}
