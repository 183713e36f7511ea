//! C-ABI exports of the statistics kernels.
//!
//! Two binding styles are exposed from one shared (and static) library:
//!
//! * flat functions `mean` and `stddev` that take a pointer and a length and
//!   copy the elements on every call,
//! * an opaque `Array` handle: `array_init` copies the elements once, then
//!   `array_mean` and `array_stddev` reuse the owned copy until `array_free`.
//!
//! Every entry point copies the caller's memory because nothing guarantees
//! the caller keeps it alive or unchanged. Declarations live in
//! `include/ffistats.h` and `include/ffistats_array.h`.

use core::ptr;

use ffibench_core::{Float64Buffer, kernels};

/// Opaque handle owning an immutable copy of the input.
pub struct Array(Float64Buffer);

impl Array {
    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

/// Copies `n` elements starting at `values` into an owned buffer.
///
/// # Safety
///
/// For `n > 0`, `values` must be non-null and point to `n` readable `f64`s.
unsafe fn copy_in(values: *const f64, n: u64) -> Float64Buffer {
    if n == 0 {
        return Float64Buffer::default();
    }
    // SAFETY: guaranteed by the caller.
    Float64Buffer::from(unsafe { core::slice::from_raw_parts(values, n as usize) })
}

/// Arithmetic mean of `n` values. Returns NaN when `n == 0`.
///
/// # Safety
///
/// `values` must point to at least `n` readable `f64`s. A shorter buffer or a
/// null pointer with `n > 0` is undefined behavior; it is not detected.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn mean(values: *const f64, n: u64) -> f64 {
    kernels::mean_unchecked(&unsafe { copy_in(values, n) })
}

/// Population standard deviation of `n` values. Returns NaN when `n == 0`.
///
/// # Safety
///
/// Same contract as [`mean`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn stddev(values: *const f64, n: u64) -> f64 {
    kernels::stddev_unchecked(&unsafe { copy_in(values, n) })
}

/// Copies `n` values into a new handle. Returns null if `values` is null and
/// `n > 0`. The handle must be released with [`array_free`].
///
/// # Safety
///
/// A non-null `values` must point to at least `n` readable `f64`s.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn array_init(values: *const f64, n: u64) -> *mut Array {
    if values.is_null() && n > 0 {
        return ptr::null_mut();
    }
    Box::into_raw(Box::new(Array(unsafe { copy_in(values, n) })))
}

/// Mean of the handle's values; NaN for an empty handle.
///
/// # Safety
///
/// `arr` must come from [`array_init`] and not have been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn array_mean(arr: *const Array) -> f64 {
    kernels::mean_unchecked(unsafe { &*arr }.values())
}

/// Population standard deviation of the handle's values; NaN for an empty
/// handle.
///
/// # Safety
///
/// Same contract as [`array_mean`].
#[unsafe(no_mangle)]
pub unsafe extern "C" fn array_stddev(arr: *const Array) -> f64 {
    kernels::stddev_unchecked(unsafe { &*arr }.values())
}

/// Releases a handle. Null is a no-op; freeing twice is undefined behavior.
///
/// # Safety
///
/// `arr` must be null or a live handle from [`array_init`], and no other
/// thread may be using it.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn array_free(arr: *mut Array) {
    if !arr.is_null() {
        drop(unsafe { Box::from_raw(arr) });
    }
}
