// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "umlforge/detect.hpp"
#include "umlforge/generator.hpp"
#include "umlforge/parse.hpp"
#include "umlforge/validate.hpp"

using namespace umlforge;

namespace {

DiagramAst must_parse(const std::string& source) {
    auto parsed = parse(source);
    REQUIRE_MESSAGE(parsed.ok(), source);
    return std::move(parsed).value();
}

ParseErrorCode error_of(const std::string& source, bool strict = false) {
    ParseOptions options;
    options.auto_declare_participants = !strict;
    auto parsed = parse(source, options);
    REQUIRE_FALSE(parsed.ok());
    return parsed.error().code;
}

GenConfig config_for(DiagramKind kind, std::uint64_t seed) {
    GenConfig config;
    config.kind = kind;
    config.seed = seed;
    return config;
}

}  // namespace

TEST_CASE("parse minimal sequence diagram") {
    DiagramAst ast = must_parse("@startuml\nparticipant A\n@enduml");
    CHECK(ast.kind() == DiagramKind::Sequence);
    REQUIRE(ast.sequence().size() == 1);
    const auto& decl = std::get<ParticipantDecl>(ast.sequence()[0].node);
    CHECK(decl.name == "A");
    CHECK(!decl.display.has_value());
}

TEST_CASE("parse minimal activity diagram") {
    DiagramAst ast = must_parse("@startuml\nstart\n:Receive request;\nstop\n@enduml");
    CHECK(ast.kind() == DiagramKind::Activity);
    REQUIRE(ast.activity().size() == 3);
    CHECK(std::holds_alternative<Start>(ast.activity()[0].node));
    CHECK(std::get<Action>(ast.activity()[1].node).label == "Receive request");
    CHECK(std::holds_alternative<Stop>(ast.activity()[2].node));
}

TEST_CASE("parse delimiter errors") {
    CHECK(error_of("@startuml\nA -> B : hello") == ParseErrorCode::MissingEndTag);
    CHECK(error_of("participant A\n@enduml") == ParseErrorCode::MissingStartTag);
    CHECK(error_of("") == ParseErrorCode::MissingStartTag);
    CHECK(error_of("@startuml\n@enduml\nextra") == ParseErrorCode::UnknownStatement);
}

TEST_CASE("parse unknown statements carry the line number") {
    auto parsed = parse("@startuml\nparticipant A\nwibble wobble\n@enduml");
    REQUIRE_FALSE(parsed.ok());
    CHECK(parsed.error().code == ParseErrorCode::UnknownStatement);
    CHECK(parsed.error().line == 3);
}

TEST_CASE("parse unbalanced blocks") {
    CHECK(error_of("@startuml\nalt ok\nA -> B : x\n@enduml") ==
          ParseErrorCode::UnbalancedBlock);
    CHECK(error_of("@startuml\nstart\nendif\nstop\n@enduml") ==
          ParseErrorCode::UnbalancedBlock);
    CHECK(error_of("@startuml\nstart\nfork\n:One;\nstop\n@enduml") ==
          ParseErrorCode::UnbalancedBlock);
    CHECK(error_of("@startuml\nA -> B : x\nend\n@enduml") ==
          ParseErrorCode::UnbalancedBlock);
    CHECK(error_of("@startuml\nelse nothing\n@enduml") ==
          ParseErrorCode::UnbalancedBlock);
}

TEST_CASE("parse rejects mixed diagram kinds") {
    CHECK(error_of("@startuml\nparticipant A\nstart\n@enduml") ==
          ParseErrorCode::MixedDiagramKinds);
    CHECK(error_of("@startuml\nstart\n:Go;\nA -> B : x\nstop\n@enduml") ==
          ParseErrorCode::MixedDiagramKinds);
}

TEST_CASE("participants auto-declare unless strict") {
    DiagramAst ast = must_parse("@startuml\nA -> B : hello\n@enduml");
    CHECK(ast.sequence().size() == 1);
    CHECK(error_of("@startuml\nA -> B : hello\n@enduml", true) ==
          ParseErrorCode::UndeclaredParticipant);
    // Declared-before-use passes in strict mode.
    ParseOptions strict;
    strict.auto_declare_participants = false;
    CHECK(parse("@startuml\nparticipant A\nparticipant B\nA -> B : x\n@enduml", strict)
              .ok());
}

TEST_CASE("parse display-name participants and both arrows") {
    DiagramAst ast = must_parse(
        "@startuml\n"
        "participant \"Auth Service\" as Auth\n"
        "Auth --> A : token granted\n"
        "A -> Auth\n"
        "@enduml");
    const auto& decl = std::get<ParticipantDecl>(ast.sequence()[0].node);
    CHECK(decl.name == "Auth");
    CHECK(decl.display == "Auth Service");
    const auto& dashed = std::get<Message>(ast.sequence()[1].node);
    CHECK(dashed.arrow == ArrowKind::Dashed);
    CHECK(dashed.label == "token granted");
    const auto& bare = std::get<Message>(ast.sequence()[2].node);
    CHECK(bare.arrow == ArrowKind::Solid);
    CHECK(bare.label.empty());
}

TEST_CASE("parse nested blocks") {
    DiagramAst ast = must_parse(
        "@startuml\n"
        "start\n"
        "if (token valid?) then (yes)\n"
        "  :Grant access;\n"
        "else (no)\n"
        "  if (retry token?) then (yes)\n"
        "    :Queue retry;\n"
        "  endif\n"
        "endif\n"
        "fork\n"
        "  :Log event;\n"
        "fork again\n"
        "  :Notify user;\n"
        "end fork\n"
        "stop\n"
        "@enduml");
    CHECK(ast.kind() == DiagramKind::Activity);
    const auto& decision = std::get<Decision>(ast.activity()[1].node);
    CHECK(decision.condition == "token valid?");
    CHECK(decision.then_label == "yes");
    REQUIRE(decision.else_branch.has_value());
    CHECK(std::holds_alternative<Decision>(decision.else_branch->body[0].node));
    const auto& fork = std::get<Fork>(ast.activity()[2].node);
    CHECK(fork.branches.size() == 2);
    CHECK(validate(ast).empty());
}

TEST_CASE("print emits canonical text") {
    DiagramAst ast = DiagramAst::make_sequence({SeqElement{ParticipantDecl{"A", {}}}});
    CHECK(print(ast) == "@startuml\nparticipant A\n@enduml\n");

    DiagramAst empty = DiagramAst::make_sequence({});
    CHECK(print(empty) == "@startuml\n@enduml\n");
}

TEST_CASE("print indents nested blocks") {
    DiagramAst ast = must_parse(
        "@startuml\nalt ok\nA -> B : ping\nelse fail\nB --> A : pong\nend\n@enduml");
    CHECK(print(ast) ==
          "@startuml\n"
          "alt ok\n"
          "  A -> B : ping\n"
          "else fail\n"
          "  B --> A : pong\n"
          "end\n"
          "@enduml\n");
}

TEST_CASE("parse accepts messy whitespace and CRLF") {
    DiagramAst ast = must_parse(
        "@startuml\r\n\r\n   participant   A  \r\n\tA ->   B :   spaced out \r\n@enduml\r\n");
    const auto& message = std::get<Message>(ast.sequence()[1].node);
    CHECK(message.label == "spaced out");
}

TEST_CASE("round-trip and canonical fixpoint over generated diagrams") {
    for (DiagramKind kind : {DiagramKind::Sequence, DiagramKind::Activity}) {
        GenConfig config = config_for(kind, 1234);
        for (std::uint64_t i = 0; i < 1000; ++i) {
            DiagramAst ast = gen_ast(config, i);
            std::string source = print(ast);
            auto reparsed = parse(source);
            REQUIRE_MESSAGE(reparsed.ok(), source);
            CHECK(reparsed.value() == ast);
            CHECK(print(reparsed.value()) == source);
        }
    }
}

TEST_CASE("validate flags unmatched activations") {
    DiagramAst ast = DiagramAst::make_sequence(
        {SeqElement{ParticipantDecl{"A", {}}}, SeqElement{Activate{"A"}}});
    auto violations = validate(ast);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].code == ViolationCode::UnmatchedActivation);

    DiagramAst deact = DiagramAst::make_sequence({SeqElement{Deactivate{"A"}}});
    REQUIRE(validate(deact).size() == 1);
    CHECK(validate(deact)[0].code == ViolationCode::UnmatchedDeactivation);
}

TEST_CASE("validate scopes activations to their block") {
    // Balanced inside the alt branch: fine.
    DiagramAst ok = must_parse(
        "@startuml\nalt ok\nA -> B : x\nactivate B\ndeactivate B\nend\n@enduml");
    CHECK(validate(ok).empty());
    // Opened at top level, closed inside a branch: two violations.
    DiagramAst bad = must_parse(
        "@startuml\nactivate B\nalt ok\ndeactivate B\nend\n@enduml");
    CHECK(validate(bad).size() == 2);
}

TEST_CASE("validate activity structure") {
    DiagramAst no_start =
        DiagramAst::make_activity({ActElement{Action{"Go"}}, ActElement{Stop{}}});
    bool saw_missing_start = false;
    for (const Violation& v : validate(no_start)) {
        if (v.code == ViolationCode::MissingStart) saw_missing_start = true;
    }
    CHECK(saw_missing_start);

    DiagramAst no_stop = DiagramAst::make_activity({ActElement{Start{}}});
    bool saw_nonterminating = false;
    for (const Violation& v : validate(no_stop)) {
        if (v.code == ViolationCode::NonTerminatingPath) saw_nonterminating = true;
    }
    CHECK(saw_nonterminating);

    DiagramAst one_branch = must_parse(
        "@startuml\nstart\nfork\n:Only;\nend fork\nstop\n@enduml");
    REQUIRE(validate(one_branch).size() == 1);
    CHECK(validate(one_branch)[0].code == ViolationCode::ForkTooFewBranches);

    DiagramAst unreachable = must_parse(
        "@startuml\nstart\nstop\n:Dead;\nstop\n@enduml");
    bool saw_unreachable = false;
    for (const Violation& v : validate(unreachable)) {
        if (v.code == ViolationCode::UnreachableElement) saw_unreachable = true;
    }
    CHECK(saw_unreachable);
}

TEST_CASE("validate accepts stop inside both decision branches") {
    DiagramAst ast = must_parse(
        "@startuml\nstart\nif (done?) then (yes)\n  stop\nelse (no)\n  stop\nendif\n@enduml");
    CHECK(validate(ast).empty());
}

TEST_CASE("validate passes all generated diagrams") {
    for (DiagramKind kind : {DiagramKind::Sequence, DiagramKind::Activity}) {
        GenConfig config = config_for(kind, 777);
        for (std::uint64_t i = 0; i < 10000; ++i) {
            DiagramAst ast = gen_ast(config, i);
            CHECK(validate(ast).empty());
        }
    }
}

TEST_CASE("detect_kind fixed examples") {
    CHECK(detect_kind("@startuml\nA -> B : m\n@enduml") == DiagramKindGuess::Sequence);
    CHECK(detect_kind("@startuml\nclass Foo {\n}\n@enduml") == DiagramKindGuess::OtherUml);
    CHECK(detect_kind("I cannot generate code for this image.") ==
          DiagramKindGuess::NotUml);
    CHECK(detect_kind("@startuml\nstart\n:Do;\nstop\n@enduml") ==
          DiagramKindGuess::Activity);
    // Nonzero marker tie resolves to OtherUml.
    CHECK(detect_kind("@startuml\nparticipant A\nstart\n@enduml") ==
          DiagramKindGuess::OtherUml);
    // A delimiter with no recognizable constructs is not UML.
    CHECK(detect_kind("@startuml\nblah blah\n@enduml") == DiagramKindGuess::NotUml);
    CHECK(detect_kind("@startuml\nactor Bob\nBob -> A : hi\n@enduml") ==
          DiagramKindGuess::OtherUml);
}

TEST_CASE("detect_kind agrees with the generator kind") {
    for (DiagramKind kind : {DiagramKind::Sequence, DiagramKind::Activity}) {
        GenConfig config = config_for(kind, 31337);
        for (std::uint64_t i = 0; i < 1000; ++i) {
            DiagramAst ast = gen_ast(config, i);
            DiagramKindGuess guess = detect_kind(print(ast));
            if (kind == DiagramKind::Sequence) {
                CHECK(guess == DiagramKindGuess::Sequence);
            } else {
                CHECK(guess == DiagramKindGuess::Activity);
            }
        }
    }
}

TEST_CASE("extract_uml_block spans the first complete block") {
    CHECK(extract_uml_block(
              "Here is the code:\n@startuml\nA -> B : m\n@enduml\nHope this helps") ==
          "@startuml\nA -> B : m\n@enduml");
    CHECK(extract_uml_block("Sorry, I can't see images.") == std::nullopt);
    CHECK(extract_uml_block("@startuml\nA -> B : m") == std::nullopt);
    CHECK(extract_uml_block("```\n@startuml\nX -> Y\n@enduml\n```") ==
          "@startuml\nX -> Y\n@enduml");
}

TEST_CASE("extract_uml_block returns a verbatim substring") {
    std::string response = "prefix @startuml body @enduml suffix @enduml";
    auto block = extract_uml_block(response);
    REQUIRE(block.has_value());
    CHECK(response.find(*block) != std::string::npos);
    CHECK(*block == "@startuml body @enduml");
}
