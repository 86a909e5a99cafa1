use std::path::Path;

use arbogray::instances::generate;

const NAMES: [&str; 8] = [
    "fig-graph13",
    "fig-bipartite7",
    "fig-flipG1",
    "fig-contraction",
    "intro-3vertex",
    "bidirected-cycle:5",
    "bidirected-complete:4",
    "random-tournament:6:42",
];

#[test]
fn generators_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in NAMES {
        let file = dir.join(format!("{}.txt", name.replace(':', "_")));
        let golden = std::fs::read(&file).unwrap_or_else(|e| panic!("{}: {e}", file.display()));
        let text = generate(name).unwrap().to_text();
        assert_eq!(text.as_bytes(), &golden[..], "{name}");
    }
}

#[test]
fn golden_files_parse_back() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in NAMES {
        let file = dir.join(format!("{}.txt", name.replace(':', "_")));
        let g = generate(file.to_str().unwrap()).unwrap();
        assert_eq!(g.to_text(), generate(name).unwrap().to_text());
    }
}
