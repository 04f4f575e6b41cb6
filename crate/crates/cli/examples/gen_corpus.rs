//! Regenerates the fixture files under `corpus/`.
//!
//! ```text
//! cargo run -p sigbasis-cli --example gen_corpus -- corpus
//! ```

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigbasis::parse_problem;

const P: u64 = 32003;
const RANDOM_SEEDS: [u64; 5] = [11, 23, 37, 41, 59];

fn header(title: &str, p: u64, vars: &[&str], order: &str) -> String {
    format!("# {title}\nfield {p}\nvars {}\norder {order}\n", vars.join(","))
}

fn join_terms(terms: &[String]) -> String {
    terms.join(" + ").replace("+ -", "- ")
}

fn katsura(n: usize) -> String {
    let vars: Vec<String> = (0..=n).map(|i| format!("u{i}")).collect();
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut out = header(&format!("katsura-{n} over GF({P})"), P, &names, "grevlex");
    let linear: Vec<String> = (0..=n)
        .map(|i| {
            if i == 0 {
                vars[0].clone()
            } else {
                format!("2*{}", vars[i])
            }
        })
        .chain(std::iter::once("-1".to_string()))
        .collect();
    let _ = writeln!(out, "poly {}", join_terms(&linear));
    for m in 0..n {
        // sum over l in -n..=n of u_|l| * u_|m-l|, with u_k = 0 for k > n.
        let mut coeff = vec![vec![0i64; n + 1]; n + 1];
        for l in -(n as i64)..=(n as i64) {
            let a = l.unsigned_abs() as usize;
            let b = (m as i64 - l).unsigned_abs() as usize;
            if b <= n {
                let (a, b) = (a.min(b), a.max(b));
                coeff[a][b] += 1;
            }
        }
        let mut terms = Vec::new();
        for a in 0..=n {
            for b in a..=n {
                let c = coeff[a][b];
                if c == 0 {
                    continue;
                }
                let mono = if a == b {
                    format!("{}^2", vars[a])
                } else {
                    format!("{}*{}", vars[a], vars[b])
                };
                terms.push(if c == 1 { mono } else { format!("{c}*{mono}") });
            }
        }
        terms.push(format!("-{}", vars[m]));
        let _ = writeln!(out, "poly {}", join_terms(&terms));
    }
    out
}

fn cyclic4() -> String {
    let v = ["a", "b", "c", "d"];
    let mut out = header(&format!("cyclic-4 over GF({P})"), P, &v, "grevlex");
    for k in 1..4 {
        let terms: Vec<String> = (0..4)
            .map(|s| (0..k).map(|i| v[(s + i) % 4]).collect::<Vec<_>>().join("*"))
            .collect();
        let _ = writeln!(out, "poly {}", join_terms(&terms));
    }
    out.push_str("poly a*b*c*d - 1\n");
    out
}

fn random_quadrics(seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monos = ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2", "x", "y", "z", "1"];
    let mut out = header(
        &format!("dense random quadrics in 3 variables over GF({P}), ChaCha8 seed {seed}"),
        P,
        &["x", "y", "z"],
        "grevlex",
    );
    for _ in 0..3 {
        let terms: Vec<String> = monos
            .iter()
            .map(|m| {
                let c: u64 = rng.random_range(1..P);
                if *m == "1" {
                    c.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        let _ = writeln!(out, "poly {}", join_terms(&terms));
    }
    out
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    std::fs::create_dir_all(&dir).expect("create corpus directory");
    let mut files = vec![
        (
            "worked_example".to_string(),
            header("two conics meeting in three points, GF(7)", 7, &["x", "y"], "lex") + "poly x^2 - y\npoly x*y - 1\n",
        ),
        ("katsura3".to_string(), katsura(3)),
        ("katsura4".to_string(), katsura(4)),
        ("cyclic4".to_string(), cyclic4()),
    ];
    for (k, seed) in RANDOM_SEEDS.iter().enumerate() {
        files.push((format!("random_quadrics_{}", k + 1), random_quadrics(*seed)));
    }
    for (name, text) in files {
        parse_problem(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let path = dir.join(format!("{name}.ideal"));
        std::fs::write(&path, text).expect("write corpus file");
        println!("{}", path.display());
    }
}
