//! Exercises the extension through an embedded interpreter.

use std::sync::Once;

use ffibench_core::kernels;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::ffi::c_str;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

static REGISTER: Once = Once::new();

fn with_module<R>(f: impl for<'py> FnOnce(Python<'py>, Bound<'py, PyModule>) -> R) -> R {
    REGISTER.call_once(|| {
        use ffistats_native::ffistats_native;
        pyo3::append_to_inittab!(ffistats_native);
    });
    Python::attach(|py| {
        let module = py.import(ffistats_native::MODULE_NAME).unwrap();
        f(py, module)
    })
}

fn call_f64<'py>(
    m: &Bound<'py, PyModule>,
    name: &str,
    arg: impl IntoPyObject<'py>,
) -> PyResult<f64> {
    m.getattr(name)?.call1((arg,))?.extract()
}

#[test]
fn module_exposes_functions_and_class() {
    with_module(|py, m| {
        let names: Vec<String> = m
            .dir()
            .unwrap()
            .iter()
            .map(|n| n.extract().unwrap())
            .filter(|n: &String| !n.starts_with("__"))
            .collect();
        assert_eq!(names, ["Array", "mean", "stddev"]);

        // Importable through the normal import statement too.
        let globals = PyDict::new(py);
        py.run(
            c_str!("import ffistats_native as f\nresult = f.mean([1.0, 2.0, 3.0])"),
            Some(&globals),
            None,
        )
        .unwrap();
        let result: f64 = globals
            .get_item("result")
            .unwrap()
            .unwrap()
            .extract()
            .unwrap();
        assert_eq!(result, 2.0);
    });
}

#[test]
fn module_functions() {
    with_module(|_py, m| {
        assert_eq!(call_f64(&m, "mean", vec![1.0, 2.0, 3.0]).unwrap(), 2.0);
        assert_eq!(call_f64(&m, "stddev", vec![5.0, 5.0]).unwrap(), 0.0);
        let sd = call_f64(&m, "stddev", vec![1.0, 2.0, 3.0]).unwrap();
        assert!((sd - 0.816496580927726).abs() < 1e-15);
    });
}

#[test]
fn integers_are_widened() {
    with_module(|_py, m| {
        assert_eq!(call_f64(&m, "mean", vec![4_i64]).unwrap(), 4.0);
        assert_eq!(call_f64(&m, "mean", (1_i64, 2.5_f64)).unwrap(), 1.75);
    });
}

#[test]
fn rejects_bad_input() {
    with_module(|py, m| {
        let mixed = PyList::new(
            py,
            [
                "x".into_pyobject(py).unwrap().into_any(),
                1.0_f64.into_pyobject(py).unwrap().into_any(),
            ],
        )
        .unwrap();
        let err = call_f64(&m, "mean", mixed).unwrap_err();
        assert!(err.is_instance_of::<PyTypeError>(py));

        let err = call_f64(&m, "mean", "abc").unwrap_err();
        assert!(err.is_instance_of::<PyTypeError>(py));

        let err = call_f64(&m, "stddev", Vec::<f64>::new()).unwrap_err();
        assert!(err.is_instance_of::<PyValueError>(py));

        let err = m
            .getattr("Array")
            .unwrap()
            .call1((Vec::<f64>::new(),))
            .unwrap_err();
        assert!(err.is_instance_of::<PyValueError>(py));
    });
}

#[test]
fn array_object() {
    with_module(|py, m| {
        let class = m.getattr("Array").unwrap();
        let a = class.call1((vec![1.0, 2.0, 3.0],)).unwrap();
        let mean: f64 = a.call_method0("mean").unwrap().extract().unwrap();
        assert_eq!(mean, 2.0);
        assert_eq!(a.len().unwrap(), 3);

        let a = class.call1((vec![7.0, 7.0],)).unwrap();
        let sd: f64 = a.call_method0("stddev").unwrap().extract().unwrap();
        assert_eq!(sd, 0.0);

        for x in [-2.5, 0.0, 1e300] {
            let a = class.call1((vec![x],)).unwrap();
            let mean: f64 = a.call_method0("mean").unwrap().extract().unwrap();
            assert_eq!(mean, x);
        }

        // Mutating the source list after construction has no effect.
        let source = PyList::new(py, [1.0, 2.0, 3.0]).unwrap();
        let a = class.call1((&source,)).unwrap();
        source.set_item(0, 100.0).unwrap();
        source.append(50.0).unwrap();
        let mean: f64 = a.call_method0("mean").unwrap().extract().unwrap();
        assert_eq!(mean, 2.0);
    });
}

#[test]
fn array_matches_module_functions_and_kernels() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let xs: Vec<f64> = (0..1000).map(|_| rng.random::<f64>()).collect();
    let kernel_mean = kernels::mean(&xs).unwrap();
    let kernel_sd = kernels::stddev(&xs).unwrap();
    with_module(|_py, m| {
        let a = m.getattr("Array").unwrap().call1((xs.clone(),)).unwrap();
        let obj_mean: f64 = a.call_method0("mean").unwrap().extract().unwrap();
        let obj_sd: f64 = a.call_method0("stddev").unwrap().extract().unwrap();
        assert_eq!(obj_mean.to_bits(), kernel_mean.to_bits());
        assert_eq!(obj_sd.to_bits(), kernel_sd.to_bits());
        assert_eq!(
            call_f64(&m, "mean", xs.clone()).unwrap().to_bits(),
            obj_mean.to_bits()
        );
        assert_eq!(
            call_f64(&m, "stddev", xs.clone()).unwrap().to_bits(),
            obj_sd.to_bits()
        );

        for _ in 0..1000 {
            let again: f64 = a.call_method0("stddev").unwrap().extract().unwrap();
            assert_eq!(again.to_bits(), obj_sd.to_bits());
        }
    });
}
