use graphpot_core::graphs::{dumbbell, necklace, theta, ColoredGraph};
use graphpot_core::laurent::LaurentPoly;
use graphpot_core::potential::{graph_potential, necklace_uvz};
use std::path::PathBuf;

fn check(name: &str, text: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, text).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(text, want, "{name}");
}

fn render(g: &ColoredGraph) -> String {
    format!("{}\n", graph_potential(g).potential)
}

#[test]
fn potentials_match_golden_files() {
    check("theta", &render(&theta()));
    check("theta_v2", &render(&theta().with_colored(&[1]).unwrap()));
    check("dumbbell", &render(&dumbbell()));
    for g in 2..=4 {
        let graph = necklace(g).unwrap();
        check(&format!("necklace{g}"), &render(&graph));
        check(&format!("necklace{g}_uvz"), &format!("{}\n", necklace_uvz(g).unwrap().potential));
    }
}

#[test]
fn colored_theta_golden_is_the_worked_example() {
    let pb = graph_potential(&theta().with_colored(&[1]).unwrap());
    let example = LaurentPoly::parse(
        pb.vars(),
        "x*y*z + x*y^-1*z^-1 + y*x^-1*z^-1 + z*x^-1*y^-1 + x^-1*y^-1*z^-1 + x*y*z^-1 + x*z*y^-1 + y*z*x^-1",
    )
    .unwrap();
    let golden = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/theta_v2.txt")).unwrap();
    assert_eq!(LaurentPoly::parse(pb.vars(), golden.trim()).unwrap(), example);
    assert_eq!(example.num_terms(), 8);
}
