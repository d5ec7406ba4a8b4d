use parkstat::cli::{run_suite, suite_names, Params};
use parkstat::report::Status;

fn main() {
    let p = Params { max_n: 4, ..Params::default() };
    for name in suite_names().into_iter().skip(1) {
        let run = run_suite(name, &p).unwrap();
        let s = &run.suite;
        println!("{name:<15} pass {:>4}  fail {}  skipped {}", s.count(Status::Pass), s.count(Status::Fail), s.count(Status::Precondition));
    }
}
