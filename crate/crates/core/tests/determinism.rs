use fieldnorm::*;

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

fn artifacts(out: &PipelineOutput) -> Vec<(String, Vec<u8>)> {
    let dir = tempfile::tempdir().unwrap();
    out.write_to(dir.path())
        .unwrap()
        .into_iter()
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap()))
        .collect()
}

#[test]
fn generator_is_thread_count_independent() {
    let cfg = SynthConfig::cross_field(11, 6, 80, (1, 300));
    let a = in_pool(1, || generate_corpus(&cfg).unwrap());
    let b = in_pool(4, || generate_corpus(&cfg).unwrap());
    assert_eq!(a, b);
    let other = generate_corpus(&SynthConfig::cross_field(12, 6, 80, (1, 300))).unwrap();
    assert_ne!(a.records, other.records);
}

#[test]
fn pipeline_artifacts_are_bytewise_stable() {
    let world = generate_corpus(&SynthConfig::leading_and_rest(5, 8, 40, 60, (1, 200))).unwrap();
    let filters =
        FilterSpec { institutions: Some((0..40).map(|i| format!("I{:04}", i + 1)).collect()), ..FilterSpec::all() };
    let run = |threads| {
        in_pool(threads, || {
            run_pipeline_on_corpora(&world, &world, &filters, &MethodId::ALL, MethodId::MeanBased.into(), &Mode::BOTH)
                .unwrap()
        })
    };
    let one = artifacts(&run(1));
    assert_eq!(one.len(), 2 + 1 + 2 + 10);
    assert_eq!(one, artifacts(&run(4)));
    assert_eq!(one, artifacts(&run(3)));
}

#[test]
fn shuffled_input_gives_identical_aggregates() {
    let corpus = generate_corpus(&SynthConfig::cross_field(21, 5, 50, (1, 60))).unwrap();
    let mut shuffled = corpus.clone();
    shuffled.records.reverse();
    let n = shuffled.records.len();
    for i in (0..n).step_by(3) {
        shuffled.records.swap(i, (i * 7919) % n);
    }
    let run = |c: &Corpus| {
        run_pipeline_on_corpora(c, c, &FilterSpec::all(), &MethodId::ALL, Metric::Raw, &Mode::BOTH).unwrap()
    };
    let (a, b) = (run(&corpus), run(&shuffled));
    assert_eq!(a.aggregates, b.aggregates);
    assert_eq!(a.reports, b.reports);
    assert_eq!(a.baselines, b.baselines);
}
