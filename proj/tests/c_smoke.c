// Copyright 2026 The rosetta-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiles the public header as C and exercises a handful of calls. */
#include <math.h>
#include <stdio.h>

#include "rosetta_sim.h"

static int failures = 0;

#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                          \
    }                                                      \
  } while (0)

int main(void) {
  rsim_fock_state* hom = NULL;
  rsim_fock_state* noon = NULL;
  double f = 0.0;
  rsim_peel_off_result res;

  CHECK(rsim_hom_entangle(&hom) == RSIM_OK);
  CHECK(rsim_fock_named(RSIM_STATE_NOON, 2, &noon) == RSIM_OK);
  CHECK(rsim_fock_fidelity(hom, noon, &f) == RSIM_OK);
  CHECK(fabs(f - 1.0) < 1e-12);
  CHECK(rsim_peel_off(2, 0.5, &res, NULL) == RSIM_OK);
  CHECK(fabs(res.success_probability - 0.0625) < 1e-12);
  rsim_fock_free(hom);
  rsim_fock_free(noon);
  if (failures == 0) printf("c smoke ok\n");
  return failures == 0 ? 0 : 1;
}
