use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use nonarch::chain::Partition;
use nonarch::measure::IntervalSet;
use nonarch::rational::from_frac;
use nonarch::{DistMatrix, FiniteVec, Rational};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonarch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn padic_embed_prints_residue_and_digits() {
    assert_eq!(
        stdout(&["padic", "embed", "--p", "2", "--prec", "4", "--value", "1/3"]),
        "residue=11 digits=1,1,0,1\n"
    );
    assert_eq!(stdout(&["padic", "digits", "--p", "3", "--prec", "3", "--value", "-1"]), "2,2,2\n");
}

#[test]
fn maxq_on_right_triangle() {
    assert_eq!(stdout(&["metric", "maxq", &data("triangle_345.txt")]), "q*=2\n");
    assert_eq!(stdout(&["metric", "maxq", "--float", &data("triangle_345.txt")]), "q*=2\n");
}

#[test]
fn maxq_on_ultrametric() {
    let sub = stdout(&["chain", "subdominant", &data("line_0_1_2_10.txt")]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_nonarch"))
        .args(["metric", "maxq"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(sub.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "q*=inf (ultrametric)\n");
}

#[test]
fn partition_blocks_reparse() {
    let text = stdout(&["chain", "partition", "--eta", "3/2", &data("line_0_1_2_10.txt")]);
    assert_eq!(text, "p0 p1 p2\np10\n");
    let d = DistMatrix::<Rational>::parse(&std::fs::read_to_string(data("line_0_1_2_10.txt")).unwrap()).unwrap();
    let p = Partition::parse(&text, &d, from_frac(3, 2)).unwrap();
    assert!(p.same_blocks(&nonarch::chain::eta_partition(&d, &from_frac(3, 2))));
}

#[test]
fn subdominant_and_quantized_matrices_reparse() {
    let sub = DistMatrix::<Rational>::parse(&stdout(&["chain", "subdominant", &data("line_0_1_2_10.txt")])).unwrap();
    assert!(sub.is_ultrametric());
    assert_eq!(*sub.get(0, 3), from_frac(8, 1));
    let f = std::env::temp_dir().join(format!("nonarch-sub-{}.txt", std::process::id()));
    std::fs::write(&f, sub.to_text()).unwrap();
    let quant = stdout(&["chain", "quantize", "--base", "3", f.to_str().unwrap()]);
    std::fs::remove_file(&f).ok();
    let quant = DistMatrix::<Rational>::parse(&quant).unwrap();
    assert_eq!(*quant.get(0, 3), from_frac(9, 1));
}

#[test]
fn chain_length_and_profile() {
    assert_eq!(
        stdout(&["chain", "length", "--from", "p0", "--to", "p10", "--a", "1", &data("line_0_1_2_10.txt")]),
        "length=10 chain=p0,p10\n"
    );
    assert_eq!(
        stdout(&["chain", "length", "--chain", "p0,p1,p2", "--a", "inf", &data("line_0_1_2_10.txt")]),
        "length=1 chain=p0,p1,p2\n"
    );
    assert_eq!(stdout(&["chain", "profile", "--x", "p0", "--r", "3", &data("line_0_1_2_10.txt")]), "eta*=8\n");
}

#[test]
fn decomposition_reparses() {
    let out = stdout(&["measure", "decompose", "--set", "[0,1)", "--eps", "0.3"]);
    let pieces: Vec<IntervalSet> = out.lines().map(|l| IntervalSet::parse(l).unwrap()).collect();
    assert_eq!(pieces.len(), 4);
    let union = pieces.iter().fold(IntervalSet::empty(), |a, p| a.union(p));
    assert_eq!(union, IntervalSet::full());
}

#[test]
fn measure_reports() {
    assert_eq!(stdout(&["measure", "integrate", &data("step.txt")]), "integral=2\n");
    assert_eq!(stdout(&["measure", "norm", "--r", "inf", &data("step.txt")]), "norm=3 power=3\n");
    assert_eq!(stdout(&["measure", "dmu", "--a", "[0,1/2)", "--b", "[1/4,3/4)"]), "d=1/2\n");
    assert_eq!(
        stdout(&["measure", "path", "--t1", "1/4", "--t2", "3/4", &data("step.txt")]),
        "difference=1 bound=3/2 holds=true\n"
    );
    assert_eq!(
        stdout(&["measure", "push", "--atoms", &data("atoms.txt"), &data("step.txt")]),
        "lhs=2 rhs=2 equal=true\n"
    );
    assert_eq!(
        stdout(&["measure", "norm", "--r", "1", "--measure", &data("flat_middle.txt"), &data("step.txt")]),
        "norm=2 power=2\n"
    );
}

#[test]
fn lr_reports() {
    assert_eq!(stdout(&["lr", "tail", "--r", "1", "--eps", "1/2", &data("vec_f.txt")]), "1\n2\n");
    assert_eq!(
        stdout(&["lr", "erdos", "--abs", "padic:2", "--eta", "1/2", "--target", "10", "--r", "1"]),
        "v_eta=4 step=1/4 length=40 endpoint_power=10 verified=true\n"
    );
    let emitted = stdout(&["lr", "erdos", "--abs", "padic:2", "--eta", "1/2", "--target", "2", "--r", "1", "--emit"]);
    assert_eq!(FiniteVec::parse(&emitted, None).unwrap().len(), 8);
    assert_eq!(
        stdout(&["lr", "sphere", "--r", "1", "--eps", "1/2", "--g", &data("vec_g.txt"), &data("vec_f.txt")]),
        "A=1,2 tail=1/10 bound=1 holds=true\n"
    );
}

#[test]
fn absval_reports() {
    assert_eq!(stdout(&["absval", "eval", "--abs", "padic:2", "--value", "12"]), "|12|=1/4\n");
    assert_eq!(
        stdout(&["absval", "equiv", "--abs1", "padic:3", "--abs2", "padic:3^2", "--samples", "3,5,1/9"]),
        "a=2\n"
    );
    let audit = stdout(&["absval", "audit", "--abs", "padic:5", "--n-max", "50"]);
    assert_eq!(audit, "non-archimedean up to n=50\nviolations=0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["padic", "embed", "--p", "4", "--prec", "2", "--value", "1"]).status.code(), Some(1));
    assert_eq!(run(&["padic", "embed", "--p", "2", "--prec", "2", "--value", "1/2"]).status.code(), Some(1));
    assert_eq!(run(&["padic", "embed", "--p", "2", "--prec", "2", "--value", "x"]).status.code(), Some(2));
    assert_eq!(run(&["padic", "embed", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["chain", "quantize", &data("line_0_1_2_10.txt")]).status.code(), Some(1));
    assert_eq!(run(&["metric", "maxq", &data("step.txt")]).status.code(), Some(2));
}
