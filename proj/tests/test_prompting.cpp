#include "doctest.h"
#include "staterep/core/error.hpp"
#include "staterep/core/strings.hpp"
#include "staterep/encoders/encode.hpp"
#include "staterep/encoders/image.hpp"
#include "staterep/encoders/vot.hpp"
#include "staterep/prompting/prompt.hpp"
#include "test_util.hpp"

using namespace staterep;
using namespace staterep::encoders;
using namespace staterep::prompting;

namespace {

EncodedObservation hanoi_encoded(Structure structure, Grounding grounding) {
    env::HanoiState state = env::HanoiState::initial(3);
    EncodedObservation obs;
    obs.text = encode_hanoi(state, structure);
    obs.format_label = structure;
    if (grounding == Grounding::TextPlusImage) {
        obs.image_png = render_image(env::Observation{state});
    }
    return obs;
}

RepresentationSpec hanoi_rep(Granularity g, Structure s, Grounding gr) {
    RepresentationSpec rep;
    rep.granularity = g;
    rep.structure = s;
    rep.grounding = gr;
    return rep;
}

}  // namespace

TEST_SUITE("prompting") {

TEST_CASE("agent template rendered with canonical fillings matches the frozen golden") {
    std::string text = render_template(TemplateId::Agent, {{"manual", "<manual>"},
                                                           {"obs", "<obs>"},
                                                           {"trajectory", "<trajectory>"},
                                                           {"question", "<question>"}});
    CHECK(text == testutil::load_golden("prompt_agent.txt"));
    CHECK(contains(text, "Action: [action number]. Reason: [explanation]"));
    CHECK(contains(text, "starting from index 1"));
    CHECK(contains(text, "Respond strictly with the action and the reason"));
    CHECK(contains(text, "Game Description: <manual>"));
}

TEST_CASE("summarization template matches the frozen golden") {
    std::string text = render_template(TemplateId::Summarizer,
                                       {{"manual", "<manual>"},
                                        {"recent_history", "<recent history>"},
                                        {"previous_summary", "<previous summary>"}});
    CHECK(text == testutil::load_golden("prompt_summarizer.txt"));
    CHECK(contains(text, "Produce a new summary ≤25 tokens."));
    CHECK(contains(text, "If the history is empty, return \"Start of game\"."));
    CHECK(contains(text, "Summary: <concise summary here>"));
}

TEST_CASE("vot template matches the frozen golden") {
    std::string text = render_template(TemplateId::AgentVoT, {{"manual", "<manual>"},
                                                              {"obs", "<obs>"},
                                                              {"trajectory", "<trajectory>"},
                                                              {"question", "<question>"}});
    CHECK(text == testutil::load_golden("prompt_vot.txt"));
    CHECK(contains(text, "Draw a compact top-down ASCII map"));
    CHECK(contains(text, "Map Update Notes:"));
    CHECK(contains(text, "Action: [number] ([action name]). Reason: [concise justification]."));
    CHECK(contains(text, "so the rolling summary stays current"));
}

TEST_CASE("strict slots: unknown or missing placeholders are configuration errors") {
    CHECK_THROWS_AS(render_template(TemplateId::Agent, {{"manual", "m"},
                                                        {"obs", "o"},
                                                        {"trajectory", "t"},
                                                        {"question", "q"},
                                                        {"extra", "x"}}),
                    Error);
    CHECK_THROWS_AS(render_template(TemplateId::Agent, {{"manual", "m"}}), Error);
}

TEST_CASE("agent prompt carries the encoded observation and trajectory block") {
    memory::TrajectoryMemory mem;
    auto rep = hanoi_rep(Granularity::LongForm, Structure::TaggedList, Grounding::TextOnly);
    auto bundle = build_agent_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                                     hanoi_encoded(Structure::TaggedList, Grounding::TextOnly),
                                     mem);
    CHECK(bundle.template_id == TemplateId::Agent);
    CHECK(bundle.action_count == 6);
    CHECK(bundle.system_text.empty());
    CHECK(contains(bundle.user_text, "- A: |bottom, [2, 1, 0], top|"));
    CHECK(contains(bundle.user_text, "Past trajectory:"));
    CHECK(contains(bundle.user_text, "1. move disk from A to B"));
    CHECK(contains(bundle.user_text, "6. move disk from C to B"));
    CHECK_FALSE(bundle.has_image());
}

TEST_CASE("summary granularity replaces the trajectory with the rolling summary") {
    memory::TrajectoryMemory mem;
    mem.append({1, "obs", "stay", 0.0});
    mem.apply_summary("Agent idle near start.");
    auto rep = hanoi_rep(Granularity::Summary, Structure::DictList, Grounding::TextOnly);
    auto bundle = build_agent_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                                     hanoi_encoded(Structure::DictList, Grounding::TextOnly),
                                     mem);
    CHECK(contains(bundle.user_text, "Summary of past actions:\nAgent idle near start."));
    CHECK_FALSE(contains(bundle.user_text, "Past trajectory:"));
}

TEST_CASE("image attachment present iff grounding is TextPlusImage") {
    memory::TrajectoryMemory mem;
    auto with_image = build_agent_prompt(
        hanoi_rep(Granularity::LongForm, Structure::Matrix, Grounding::TextPlusImage),
        env::spec_for("hanoi"), env::Family::Hanoi, "manual",
        hanoi_encoded(Structure::Matrix, Grounding::TextPlusImage), mem);
    CHECK(with_image.has_image());

    CHECK_THROWS_AS(build_agent_prompt(
                        hanoi_rep(Granularity::LongForm, Structure::Matrix,
                                  Grounding::TextPlusImage),
                        env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                        hanoi_encoded(Structure::Matrix, Grounding::TextOnly), mem),
                    Error);
}

TEST_CASE("structure and family mismatches are configuration errors") {
    memory::TrajectoryMemory mem;
    auto rep = hanoi_rep(Granularity::LongForm, Structure::Symbolic, Grounding::TextOnly);
    CHECK_THROWS_AS(build_agent_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                                       hanoi_encoded(Structure::TaggedList, Grounding::TextOnly),
                                       mem),
                    Error);

    auto ok_rep = hanoi_rep(Granularity::LongForm, Structure::DictList, Grounding::TextOnly);
    CHECK_THROWS_AS(build_agent_prompt(ok_rep, env::spec_for("hanoi"), env::Family::Hanoi,
                                       "manual",
                                       hanoi_encoded(Structure::TaggedList, Grounding::TextOnly),
                                       mem),
                    Error);
}

TEST_CASE("vot prompt embeds the oracle map only when oracle_vot is set") {
    memory::TrajectoryMemory mem;
    auto rep = hanoi_rep(Granularity::Summary, Structure::TaggedList, Grounding::TextPlusVoT);
    auto bundle = build_vot_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                                   hanoi_encoded(Structure::TaggedList, Grounding::TextOnly), mem,
                                   "");
    CHECK(bundle.template_id == TemplateId::AgentVoT);
    CHECK(contains(bundle.user_text, "Map Update Notes:"));
    CHECK_FALSE(contains(bundle.user_text, "ground-truth map"));

    rep.oracle_vot = true;
    std::string map = oracle_vot_map(env::HanoiState::initial(3));
    auto oracle_bundle = build_vot_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi,
                                          "manual",
                                          hanoi_encoded(Structure::TaggedList, Grounding::TextOnly),
                                          mem, map);
    CHECK(contains(oracle_bundle.user_text, "Use this map instead of drawing your own"));
    CHECK(contains(oracle_bundle.user_text, "Rod A: [2, 1, 0]  (top is 0, bottom is 2)"));

    // Flag/map mismatches are rejected both ways.
    CHECK_THROWS_AS(build_vot_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                                     hanoi_encoded(Structure::TaggedList, Grounding::TextOnly),
                                     mem, ""),
                    Error);
    rep.oracle_vot = false;
    CHECK_THROWS_AS(build_vot_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "manual",
                                     hanoi_encoded(Structure::TaggedList, Grounding::TextOnly),
                                     mem, map),
                    Error);
}

TEST_CASE("oracle vot on a grid task embeds the ground-truth map") {
    Rng rng(6);
    env::GridWorldState state = env::grid_spawn(env::MissionSpec::Task::Pickup, rng);
    auto obs = env::grid_observe(state);
    EncodedObservation encoded;
    encoded.text = encode_grid(obs);
    encoded.format_label = Structure::NaturalLanguage;

    RepresentationSpec rep;
    rep.granularity = Granularity::Summary;
    rep.structure = Structure::NaturalLanguage;
    rep.grounding = Grounding::TextPlusVoT;
    rep.oracle_vot = true;

    memory::TrajectoryMemory mem;
    std::string map = oracle_vot_map(state);
    auto bundle = build_vot_prompt(rep, env::spec_for("babyai-pickup"), env::Family::Grid,
                                   "manual", encoded, mem, map);
    CHECK(contains(bundle.user_text, "Map (Top-Down View):"));
    CHECK(contains(bundle.user_text, map));
    CHECK(contains(bundle.user_text, "Use this map instead of drawing your own"));
}

TEST_CASE("parse_action accepts the reference formats") {
    auto a = try_parse_action("Action: 3. Reason: moves toward the goal", 6);
    REQUIRE(a.has_value());
    CHECK(a->action_index == 3);
    CHECK(a->reason == "moves toward the goal");
    CHECK_FALSE(a->fallback_used);

    auto b = try_parse_action("Action: [2] (Move North). Reason: approach the message.", 5);
    REQUIRE(b.has_value());
    CHECK(b->action_index == 2);

    CHECK_FALSE(try_parse_action("I think we should go east", 5).has_value());
    CHECK_FALSE(try_parse_action("Action: 0. Reason: none", 5).has_value());
    CHECK_FALSE(try_parse_action("Action: 9. Reason: none", 6).has_value());
    CHECK_FALSE(try_parse_action("Action: go east", 5).has_value());
}

TEST_CASE("parse_action skips an Action: occurrence without an integer") {
    auto parsed = try_parse_action(
        "The format is Action: [action number]. Reason: [explanation]\n"
        "Action: 4. Reason: actual decision",
        6);
    REQUIRE(parsed.has_value());
    CHECK(parsed->action_index == 4);
}

TEST_CASE("parse_action round-trips every well-formed index") {
    for (int count : {5, 6}) {
        for (int i = 1; i <= count; ++i) {
            std::string reply = "Action: " + std::to_string(i) + ". Reason: test";
            auto parsed = try_parse_action(reply, count);
            REQUIRE(parsed.has_value());
            CHECK(parsed->action_index == i);
        }
    }
}

TEST_CASE("fallback draws a deterministic legal action from the seeded stream") {
    Rng a = Rng::episode_stream(9, 0, rng_stream::kFallback);
    Rng b = Rng::episode_stream(9, 0, rng_stream::kFallback);
    for (int i = 0; i < 50; ++i) {
        auto fa = resolve_fallback(a, 6, "gibberish");
        auto fb = resolve_fallback(b, 6, "gibberish");
        CHECK(fa.action_index == fb.action_index);
        CHECK(fa.action_index >= 1);
        CHECK(fa.action_index <= 6);
        CHECK(fa.fallback_used);
        CHECK(fa.raw_reply == "gibberish");
    }
}

TEST_CASE("extract_summary_line takes the first line with content") {
    CHECK(extract_summary_line("Summary: all good.") == "all good.");
    CHECK(extract_summary_line("Reasoning: x\nSummary: holding key, heading north.\ntrailer") ==
          "holding key, heading north.");
    CHECK(extract_summary_line("Summary:\nSummary: second has content.") ==
          "second has content.");
    CHECK_FALSE(extract_summary_line("no such line").has_value());
}

TEST_CASE("prompt assembly is pure") {
    memory::TrajectoryMemory mem;
    mem.append({1, "obs text", "stay", 0.0});
    auto rep = hanoi_rep(Granularity::LongForm, Structure::TaggedList, Grounding::TextOnly);
    auto enc = hanoi_encoded(Structure::TaggedList, Grounding::TextOnly);
    auto one = build_agent_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "m", enc, mem);
    auto two = build_agent_prompt(rep, env::spec_for("hanoi"), env::Family::Hanoi, "m", enc, mem);
    CHECK(one.user_text == two.user_text);
}

}  // TEST_SUITE
