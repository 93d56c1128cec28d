//! Seeded synthetic corpora for benchmarking the pipeline.

use defminer_core::{Corpus, Document};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GENERA: &[&str] = &[
    "a branch of computer science",
    "an interdisciplinary field",
    "the study of intelligent machines",
    "a set of techniques",
    "the ability of a computer",
];
const TAILS: &[&str] = &[
    "that deals with symbolic programming",
    "to perform the functions typical of the human mind",
    "that extracts insights from data",
    "which uses statistical methods",
];
const HYPONYMS: &[&str] = &[
    "computer vision",
    "machine translation",
    "fuzzy logic",
    "neural networks",
    "genetic algorithms",
    "image recognition",
];
const FILLER: &[&str] = &[
    "We propose a new method for the analysis of sensor data.",
    "Results show a clear improvement over the baseline.",
    "The survey covers recent work in the area.",
    "Experiments were run on three public datasets.",
];

/// `n` abstracts mentioning `term`, deterministic in `seed`.
pub fn synthetic_corpus(term: &str, n: usize, seed: u64) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let docs = (0..n)
        .map(|i| {
            let mut sentences: Vec<String> = Vec::new();
            for _ in 0..rng.gen_range(1..4) {
                sentences.push(FILLER.choose(&mut rng).unwrap().to_string());
            }
            match rng.gen_range(0..3) {
                0 => sentences.push(format!(
                    "{} is {} {}.",
                    capitalize(term),
                    GENERA.choose(&mut rng).unwrap(),
                    TAILS.choose(&mut rng).unwrap()
                )),
                1 => {
                    let items: Vec<&str> = HYPONYMS.choose_multiple(&mut rng, 3).copied().collect();
                    sentences.push(format!(
                        "Many {term} applications such as {}, {} and {} are studied.",
                        items[0], items[1], items[2]
                    ));
                }
                _ => {}
            }
            sentences.shuffle(&mut rng);
            Document::new(format!("doc-{i:06}"), sentences.join(" ")).with_year(2010 + (i % 10) as i32)
        })
        .collect();
    Corpus::new(docs).expect("generated ids are unique")
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}
