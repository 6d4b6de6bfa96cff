#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace hurwitz::cli;

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz stability, Hadamard products and idealizer families"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print the JSON payload instead of text");

    CheckOptions check;
    auto* c = app.add_subcommand("check", "stability verdict, minors and root cross-check");
    c->add_option("poly", check.poly, "coefficients, ascending, comma separated")->required();
    c->add_flag("--quasi", check.quasi, "affirm quasi-stability instead of stability");
    c->add_flag("--descending", check.descending, "coefficients are given highest degree first");
    c->add_option("--eps", check.eps, "imaginary-axis band for the root cross-check");
    c->add_flag("--json", json);

    HadamardOptions had;
    auto* h = app.add_subcommand("hadamard", "coefficient-wise product and its verdict");
    h->add_option("first", had.first)->required();
    h->add_option("second", had.second)->required();
    h->add_flag("--quasi", had.quasi);
    h->add_flag("--descending", had.descending);
    h->add_flag("--json", json);

    IdealizerOptions ideal;
    auto* id = app.add_subcommand("idealizer", "membership in W, Wbar, Y, Y4, Y5, Ystar");
    id->add_option("poly", ideal.poly)->required();
    id->add_option("--family", ideal.family, "W | Wbar | Y | Y4 | Y5 | Ystar");
    id->add_option("--n", ideal.n, "family degree (defaults to deg g)");
    id->add_flag("--descending", ideal.descending);
    id->add_flag("--json", json);

    VerifyOptions verify;
    verify.seed = default_seed();
    auto* v = app.add_subcommand("verify", "run a seeded property suite");
    v->add_option("suite", verify.suite, "lemmas | theorems | gw | hb | lemma3 | criteria")->required();
    v->add_option("--samples", verify.samples);
    v->add_option("--seed", verify.seed);
    v->add_flag("--json", json);

    SearchOptions search;
    search.seed = default_seed();
    auto* s = app.add_subcommand("search", "probe Y_n against stable f for unstable products");
    s->add_option("--n", search.degrees, "degree N or range A..B")->required();
    s->add_option("--samples", search.samples);
    s->add_option("--seed", search.seed);
    s->add_option("--out", search.out, "findings file (JSON lines); manifest written next to it");
    s->add_flag("--json", json);

    auto* e = app.add_subcommand("examples", "reproduce the two worked examples");
    e->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kUsageError;
    }

    CommandResult result;
    if (*c) result = cmd_check(check);
    else if (*h) result = cmd_hadamard(had);
    else if (*id) result = cmd_idealizer(ideal);
    else if (*v) result = cmd_verify(verify);
    else if (*s) result = cmd_search(search);
    else result = cmd_examples();

    if (json) {
        std::cout << result.payload.dump(2) << "\n";
    } else {
        (result.exit_code >= kUsageError ? std::cerr : std::cout) << result.human_text;
    }
    return result.exit_code;
}
