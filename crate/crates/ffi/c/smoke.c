#include <stdio.h>
#include <string.h>

#include "zk3.h"

int main(void) {
    const int64_t a2[] = {-2, 1, 1, -2};
    Zk3Lattice *l = NULL;
    char *s = NULL;
    if (zk3_lattice_from_gram(a2, 2, &l) != ZK3_STATUS_OK) return 1;
    if (zk3_lattice_discriminant(l, &s) != ZK3_STATUS_OK || strcmp(s, "3") != 0) return 2;
    zk3_string_free(s);
    if (zk3_lattice_discriminant_group(l, &s) != ZK3_STATUS_OK || strcmp(s, "Z/3") != 0) return 3;
    zk3_string_free(s);
    zk3_lattice_free(l);

    if (zk3_quat_mul(ZK3_CASE_J0, 5, "0,1,0,0", "0,1,0,0", &s) != ZK3_STATUS_OK || strcmp(s, "-5,0,0,0") != 0) return 4;
    zk3_string_free(s);

    if (zk3_quat_mul(ZK3_CASE_J0, 7, "1,0,0,0", "1,0,0,0", &s) != ZK3_STATUS_INADMISSIBLE_PRIME) return 5;
    if (zk3_last_error() == NULL) return 6;

    printf("ok\n");
    return 0;
}
