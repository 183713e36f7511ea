/* Flat statistics exports: each call copies `n` values from `values`. */
#ifndef FFISTATS_H
#define FFISTATS_H

#include <stdint.h>
#include <stdlib.h>

#ifdef __cplusplus
extern "C" {
#endif

double mean(
    double *values, uint64_t n);
double stddev(
    double *values, uint64_t n);

#ifdef __cplusplus
}
#endif

#endif /* FFISTATS_H */
