#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "lemmaflow.h"

int main(void) {
    LfNetwork *net = NULL;
    LfStatus st = lf_network_parse("agent a. axiom p. end. ?- p @ a.", &net);
    assert(st == LF_OK);
    assert(lf_network_agent_count(net) == 1);
    LfProof *proof = NULL;
    LfLimits limits = lf_limits_default();
    st = lf_prove(net, &limits, 1, &proof);
    assert(st == LF_OK);
    assert(lf_proof_is_proved(proof));
    char *report = NULL;
    st = lf_proof_report(proof, false, &report);
    assert(st == LF_OK);
    assert(strstr(report, "overall: proved") != NULL);
    lf_string_free(report);
    lf_proof_free(proof);
    lf_network_free(net);
    printf("c smoke ok\n");
    return 0;
}
