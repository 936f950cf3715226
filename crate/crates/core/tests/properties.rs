use std::collections::BTreeSet;

use fieldnorm::aggregate::{aggregate_all_with_baselines, read_aggregates_csv, write_aggregates_csv};
use fieldnorm::analyze::{assign_ranks, average_ranks, rank_shift};
use fieldnorm::normalize::{read_scores_csv, write_scores_csv};
use fieldnorm::numeric::{compensated_sum, two_pass_mean};
use fieldnorm::*;
use proptest::prelude::*;

fn citations(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(prop_oneof![3 => 0u64..5, 3 => 0u64..200, 1 => 0u64..100_000], 1..max_len)
}

/// Citations with at least two distinct values and one cited paper, so no
/// baseline is degenerate.
fn spread_citations() -> impl Strategy<Value = Vec<u64>> {
    citations(300).prop_filter("needs spread", |c| {
        let distinct: BTreeSet<_> = c.iter().collect();
        let mut sorted = c.clone();
        sorted.sort_unstable();
        distinct.len() >= 2 && sorted[sorted.len() / 2] > 0 && sorted[(sorted.len() - 1) / 2] > 0
    })
}

fn record(p: usize, inst: usize, field: usize, c: u64) -> PaperRecord {
    PaperRecord {
        paper_id: format!("P{p:05}"),
        institution_id: format!("I{inst:03}"),
        field_id: format!("F{field}"),
        year: 2010 + (p % 5) as i32,
        doc_type: if p.is_multiple_of(7) { "review".into() } else { "article".into() },
        citations: c,
    }
}

/// Records spread over up to 3 fields and 12 institutions.
fn corpus_strategy() -> impl Strategy<Value = Corpus> {
    prop::collection::vec((0usize..12, 0usize..3, prop_oneof![0u64..6, 0u64..500]), 3..250).prop_map(|v| {
        let recs = v.into_iter().enumerate().map(|(p, (i, f, c))| record(p, i, f, c)).collect();
        Corpus::new(recs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scores_are_monotone_in_citations(cites in spread_citations(), a in 0u64..1000, b in 0u64..1000) {
        let base = compute_field_baseline(&cites, "F").unwrap();
        let (lo, hi) = (a.min(b), a.max(b));
        for m in MethodId::ALL {
            prop_assert!(m.score(lo, &base).unwrap() <= m.score(hi, &base).unwrap(), "{}", m);
        }
    }

    #[test]
    fn linear_and_log_links(cites in spread_citations(), x in 0u64..5000) {
        let b = compute_field_baseline(&cites, "F").unwrap();
        let s = |m: MethodId| m.score(x, &b).unwrap();
        let xf = x as f64;
        prop_assert!((s(MethodId::MeanBased) * b.mean - xf).abs() <= 1e-9 * xf.max(1.0));
        prop_assert!((s(MethodId::MedianBased) * b.median - xf).abs() <= 1e-9 * xf.max(1.0));
        prop_assert!((s(MethodId::ZScore) * b.sd + b.mean - xf).abs() <= 1e-9 * xf.max(1.0));
        // log z is an affine function of NLCS within a field
        let via_nlcs = (s(MethodId::Nlcs) * b.log_mean - b.log_mean) / b.log_sd;
        prop_assert!((s(MethodId::LogZ) - via_nlcs).abs() <= 1e-9 * via_nlcs.abs().max(1.0));
    }

    #[test]
    fn ratio_methods_ignore_scale(cites in spread_citations(), k in 2u64..50) {
        let scaled: Vec<u64> = cites.iter().map(|c| c * k).collect();
        let b1 = compute_field_baseline(&cites, "F").unwrap();
        let b2 = compute_field_baseline(&scaled, "F").unwrap();
        for &c in &cites {
            for m in [MethodId::MeanBased, MethodId::MedianBased, MethodId::ZScore] {
                let (u, v) = (m.score(c, &b1).unwrap(), m.score(c * k, &b2).unwrap());
                prop_assert!((u - v).abs() <= 1e-9 * u.abs().max(1.0), "{}", m);
            }
            let pr = MethodId::PercentileRank;
            prop_assert_eq!(pr.score(c, &b1).unwrap(), pr.score(c * k, &b2).unwrap());
        }
    }

    #[test]
    fn baseline_invariants(cites in citations(400)) {
        let b = compute_field_baseline(&cites, "F").unwrap();
        let (min, max) = (*cites.iter().min().unwrap() as f64, *cites.iter().max().unwrap() as f64);
        prop_assert_eq!(b.n, cites.len());
        prop_assert!(b.mean >= min && b.mean <= max);
        prop_assert!(b.median >= min && b.median <= max);
        prop_assert!(b.sd >= 0.0 && b.log_sd >= 0.0 && b.log_mean >= 0.0);
        prop_assert!(b.sorted_citations.windows(2).all(|w| w[0] <= w[1]));
        let constant = min == max;
        prop_assert_eq!(b.has_flag(DegenerateFlag::ZeroSd), constant);
        prop_assert_eq!(b.has_flag(DegenerateFlag::ZeroLogsd), constant);
        prop_assert_eq!(b.has_flag(DegenerateFlag::ZeroLogmean), max == 0.0);
        let pr = |x| fieldnorm::normalize::percentile_rank(x, &b);
        prop_assert!(pr(max as u64) == 100.0 && pr(min as u64) > 0.0);
    }

    #[test]
    fn baselines_ignore_order(mut cites in citations(300), seed in any::<u64>()) {
        let a = compute_field_baseline(&cites, "F").unwrap();
        // deterministic shuffle
        let n = cites.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            cites.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(a, compute_field_baseline(&cites, "F").unwrap());
    }

    #[test]
    fn mean_is_exact_for_constants(v in 0u64..1_000_000, n in 1usize..500) {
        let xs = vec![v as f64; n];
        prop_assert_eq!(two_pass_mean(&xs), v as f64);
    }

    #[test]
    fn filters_are_idempotent(c in corpus_strategy(), years in (2010i32..2015, 0i32..3), top in 1usize..8) {
        let spec = FilterSpec {
            doc_types: Some(vec!["Article".into()]),
            year_range: Some((years.0, years.0 + years.1)),
            fields: None,
            institutions: None,
            top_n_by_output: Some(top),
        };
        let once = apply_filters(&c, &spec).unwrap();
        let twice = apply_filters(&once, &spec).unwrap();
        prop_assert_eq!(&once.records, &twice.records);
        prop_assert!(once.records.iter().all(|r| r.doc_type == "article"));
        prop_assert!(once.institutions().len() <= top);
        prop_assert_eq!(apply_filters(&c, &FilterSpec::all()).unwrap().records, c.records);
    }

    #[test]
    fn corpus_round_trips(c in corpus_strategy(), jsonl in any::<bool>()) {
        let format = if jsonl { InputFormat::Jsonl } else { InputFormat::Csv };
        let mut buf = Vec::new();
        c.write(format, &mut buf).unwrap();
        prop_assert_eq!(load_corpus(buf.as_slice(), format).unwrap().records, c.records);
    }

    #[test]
    fn score_and_aggregate_files_round_trip(c in corpus_strategy()) {
        let b = compute_baseline_set(&c).unwrap();
        // fields may be degenerate; percentile rank never is
        let rows = score_corpus(&c, &b, &[MethodId::PercentileRank]).unwrap();
        let mut buf = Vec::new();
        write_scores_csv(&rows, &mut buf).unwrap();
        let back = read_scores_csv(buf.as_slice()).unwrap();
        prop_assert_eq!(back.len(), rows.len());
        for (x, y) in rows.iter().zip(&back) {
            let (u, v) = (x.score(MethodId::PercentileRank).unwrap(), y.score(MethodId::PercentileRank).unwrap());
            prop_assert!((u - v).abs() <= 1e-8 * u.abs());
            prop_assert_eq!((&x.paper_id, x.citations), (&y.paper_id, y.citations));
        }
        let aggs = aggregate_all(&rows).unwrap();
        let mut buf = Vec::new();
        write_aggregates_csv(&aggs, &mut buf).unwrap();
        let back = read_aggregates_csv(buf.as_slice()).unwrap();
        prop_assert_eq!(back.len(), aggs.len());
        for (x, y) in aggs.iter().zip(&back) {
            prop_assert_eq!((&x.institution_id, x.n_papers, x.tc_sum), (&y.institution_id, y.n_papers, y.tc_sum));
        }
    }

    #[test]
    fn aggregation_ignores_row_order(c in corpus_strategy()) {
        let b = compute_baseline_set(&c).unwrap();
        let rows = score_corpus(&c, &b, &[MethodId::PercentileRank]).unwrap();
        let mut rev = rows.clone();
        rev.reverse();
        prop_assert_eq!(aggregate_all(&rows).unwrap(), aggregate_all(&rev).unwrap());
    }

    #[test]
    fn ap1_is_n_times_ap2(c in corpus_strategy()) {
        let b = compute_baseline_set(&c).unwrap();
        let rows = score_corpus(&c, &b, &[MethodId::PercentileRank]).unwrap();
        for a in aggregate_all(&rows).unwrap() {
            let agg = a.per_method.get(MethodId::PercentileRank).unwrap();
            prop_assert_eq!(agg.ap2, agg.ap1 / a.n_papers as f64);
            prop_assert!((agg.ap1 - a.n_papers as f64 * agg.ap2).abs() <= 1e-12 * agg.ap1);
            prop_assert_eq!(a.tc_ave, a.tc_sum as f64 / a.n_papers as f64);
        }
    }

    #[test]
    fn field_total_aggregation_matches_paper_sums(c in corpus_strategy()) {
        let b = compute_baseline_set(&c).unwrap();
        let Ok(rows) = score_corpus(&c, &b, &MethodId::ALL) else { return Ok(()) };
        let plain = aggregate_all(&rows).unwrap();
        let exact = aggregate_all_with_baselines(&rows, &b).unwrap();
        for (p, e) in plain.iter().zip(&exact) {
            for m in MethodId::ALL {
                let (x, y) = (p.per_method.get(m).unwrap(), e.per_method.get(m).unwrap());
                let tol = |v: f64| 1e-10 * v.abs().max(1.0) * p.n_papers as f64;
                prop_assert!((x.ap1 - y.ap1).abs() <= tol(x.ap1), "{} {} vs {}", m, x.ap1, y.ap1);
                prop_assert!((x.ap2 - y.ap2).abs() <= tol(x.ap2), "{} {} vs {}", m, x.ap2, y.ap2);
                prop_assert!((y.ap1 - e.n_papers as f64 * y.ap2).abs() <= tol(y.ap1));
            }
        }
    }

    #[test]
    fn aggregation_merges(c in corpus_strategy(), split in 1usize..11) {
        let b = compute_baseline_set(&c).unwrap();
        let rows = score_corpus(&c, &b, &[MethodId::PercentileRank]).unwrap();
        let cut = format!("I{split:03}");
        let (left, right): (Vec<_>, Vec<_>) = rows.iter().cloned().partition(|r| r.institution_id < cut);
        let mut merged = aggregate_all(&left).unwrap();
        merged.extend(aggregate_all(&right).unwrap());
        prop_assert_eq!(merged, aggregate_all(&rows).unwrap());
    }

    #[test]
    fn pearson_affine_invariance(
        xy in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 3..200),
        a in prop_oneof![-50.0f64..-0.1, 0.1f64..50.0],
        shift in -1e4f64..1e4,
    ) {
        let (xs, ys): (Vec<f64>, Vec<f64>) = xy.into_iter().unzip();
        let Ok(r) = pearson(&xs, &ys) else { return Ok(()) };
        let moved: Vec<f64> = xs.iter().map(|x| a * x + shift).collect();
        let r2 = pearson(&moved, &ys).unwrap();
        prop_assert!((r2 - a.signum() * r).abs() <= 1e-9);
        prop_assert!((-1.0..=1.0).contains(&r));
    }

    #[test]
    fn spearman_monotone_invariance(xy in prop::collection::vec((0i32..40, -20i32..20), 3..200)) {
        let xs: Vec<f64> = xy.iter().map(|p| p.0 as f64).collect();
        let ys: Vec<f64> = xy.iter().map(|p| p.1 as f64).collect();
        let Ok(rho) = spearman(&xs, &ys) else { return Ok(()) };
        let cubed: Vec<f64> = xs.iter().map(|x| x * x * x + 7.0).collect();
        prop_assert_eq!(spearman(&cubed, &ys).unwrap(), rho);
        let flipped: Vec<f64> = xs.iter().map(|x| -x).collect();
        prop_assert!((spearman(&flipped, &ys).unwrap() + rho).abs() <= 1e-12);
        let ranks = average_ranks(&xs);
        prop_assert!((ranks.iter().sum::<f64>() - (xs.len() * (xs.len() + 1)) as f64 / 2.0).abs() < 1e-9);
    }

    #[test]
    fn p_values_are_probabilities(r in -0.999f64..0.999, n in 3usize..5000) {
        let p = corr_p_value(r, n).unwrap();
        prop_assert!((0.0..=1.0).contains(&p));
        let stronger = (r.abs() + 1.0) / 2.0;
        prop_assert!(corr_p_value(stronger, n).unwrap() <= p);
    }

    #[test]
    fn competition_ranks(values in prop::collection::vec(0u8..20, 1..100)) {
        let vals: Vec<f64> = values.iter().map(|&v| v as f64).collect();
        let ids: Vec<String> = (0..vals.len()).map(|i| format!("u{i:03}")).collect();
        let t = assign_ranks(&vals, &ids).unwrap();
        for (i, id) in ids.iter().enumerate() {
            let greater = vals.iter().filter(|&&v| v > vals[i]).count();
            prop_assert_eq!(t.rank_of(id).unwrap(), greater + 1);
        }
    }

    #[test]
    fn rank_shift_is_antisymmetric(pairs in prop::collection::vec((0u8..30, 0u8..30), 1..80)) {
        let ids: Vec<String> = (0..pairs.len()).map(|i| format!("u{i:03}")).collect();
        let a: Vec<f64> = pairs.iter().map(|p| p.0 as f64).collect();
        let b: Vec<f64> = pairs.iter().map(|p| p.1 as f64).collect();
        let (ta, tb) = (assign_ranks(&a, &ids).unwrap(), assign_ranks(&b, &ids).unwrap());
        let ab = rank_shift(&ta, &tb).unwrap();
        let ba = rank_shift(&tb, &ta).unwrap();
        for r in &ab {
            let back = ba.iter().find(|s| s.institution_id == r.institution_id).unwrap();
            prop_assert_eq!(r.shift, -back.shift);
        }
        prop_assert!(rank_shift(&ta, &ta).unwrap().iter().all(|r| r.shift == 0));
    }

    #[test]
    fn compensated_sum_is_order_free_for_integers(v in prop::collection::vec(0u32..1_000_000, 0..500)) {
        let exact: u64 = v.iter().map(|&x| x as u64).sum();
        let fw = compensated_sum(v.iter().map(|&x| x as f64));
        let bw = compensated_sum(v.iter().rev().map(|&x| x as f64));
        prop_assert_eq!(fw, exact as f64);
        prop_assert_eq!(bw, exact as f64);
    }
}
