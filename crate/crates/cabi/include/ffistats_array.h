/*
 * Opaque array handle: values are copied once by array_init and reused by
 * every array_* call until array_free.
 */
#ifndef FFISTATS_ARRAY_H
#define FFISTATS_ARRAY_H

#include <stdint.h>
#include <stdlib.h>

#ifdef __cplusplus
extern "C" {
#endif

struct Array;

/* Returns NULL when values is NULL and n > 0. */
struct Array *
array_init(double *, uint64_t);
double array_mean(struct Array *);
double array_stddev(struct Array *);
/* NULL is a no-op. */
void array_free(struct Array *);

#ifdef __cplusplus
}
#endif

#endif /* FFISTATS_ARRAY_H */
