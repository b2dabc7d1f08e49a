mod qubit_linear_algebra {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/qubit_linear_algebra.rs"
    ));
}

#[test]
fn qubit_linear_algebra_runs() {
    qubit_linear_algebra::run_example().expect("qubit linear algebra example should run");
}

mod collision_dynamics {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/collision_dynamics.rs"
    ));
}

#[test]
fn collision_dynamics_runs() {
    collision_dynamics::run_example().expect("collision dynamics example should run");
}

mod steady_state {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/steady_state.rs"
    ));
}

#[test]
fn steady_state_runs() {
    steady_state::run_example().expect("steady state example should run");
}

mod coherence_decay {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/coherence_decay.rs"
    ));
}

#[test]
fn coherence_decay_runs() {
    coherence_decay::run_example().expect("coherence decay example should run");
}

mod limiting_regimes {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/limiting_regimes.rs"
    ));
}

#[test]
fn limiting_regimes_runs() {
    limiting_regimes::run_example().expect("limiting regimes example should run");
}

mod stroboscopic_rates {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/stroboscopic_rates.rs"
    ));
}

#[test]
fn stroboscopic_rates_runs() {
    stroboscopic_rates::run_example().expect("stroboscopic rates example should run");
}

mod single_bath_comparison {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/single_bath_comparison.rs"
    ));
}

#[test]
fn single_bath_comparison_runs() {
    single_bath_comparison::run_example().expect("single bath comparison example should run");
}

mod thermalization_runtime {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/thermalization_runtime.rs"
    ));
}

#[test]
fn thermalization_runtime_runs() {
    thermalization_runtime::run_example().expect("thermalization runtime example should run");
}

mod heat_and_work {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/heat_and_work.rs"
    ));
}

#[test]
fn heat_and_work_runs() {
    heat_and_work::run_example().expect("heat and work example should run");
}

mod parameter_sweep {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/parameter_sweep.rs"
    ));
}

#[test]
fn parameter_sweep_runs() {
    parameter_sweep::run_example().expect("parameter sweep example should run");
}

mod oracle_suite {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/oracle_suite.rs"
    ));
}

#[test]
fn oracle_suite_runs() {
    oracle_suite::run_example().expect("oracle suite example should run");
}
