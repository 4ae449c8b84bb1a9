use flagorbits_py::flagorbits_py;
use pyo3::prelude::*;

#[test]
fn module_runs_in_embedded_interpreter() {
    pyo3::append_to_inittab!(flagorbits_py);
    pyo3::prepare_freethreaded_python();
    Python::with_gil(|py| {
        let code = r#"
import flagorbits_py as f
assert f.mwz_classify("A", 4, ["2,2", "2,2", "2,2"]).matched_rows == ["D_4"]
assert f.classify("AIII:2,2", "1,1,1,1", "B").status == "InfiniteProven"
assert f.count_k_orbits("AIII:1,1", "1,1", "K", 2) == 3
assert f.lr_coefficient("3,2,1", "2,1", "2,1") == 2
assert f.weyl_dim("2,1", 3) == 8
assert len(f.enumerate_clans(2, 1)) == 6
try:
    f.growth_probe("AIII:2,2", "1,1,1,1", "B", budget=100)
    raise AssertionError("budget not enforced")
except f.BudgetExceeded:
    pass
"#;
        py.run_bound(code, None, None).unwrap();
    });
}
