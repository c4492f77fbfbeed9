// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/external_render.hpp"

#include <sys/wait.h>
#include <signal.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "umlforge/png.hpp"

namespace umlforge {

namespace {

namespace fs = std::filesystem;

std::string substitute(std::string_view tmpl, std::string_view key,
                       const std::string& value) {
    std::string out;
    std::size_t pos = 0;
    while (pos < tmpl.size()) {
        std::size_t hit = tmpl.find(key, pos);
        if (hit == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        out.append(tmpl.substr(pos, hit - pos));
        out.append(value);
        pos = hit + key.size();
    }
    return out;
}

struct TempDir {
    fs::path path;

    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "umlforge-XXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        if (char* made = mkdtemp(buf.data())) path = made;
    }
    ~TempDir() {
        if (!path.empty()) {
            std::error_code ec;
            fs::remove_all(path, ec);
        }
    }
};

}  // namespace

Result<RenderOutcome, ExternalError> external_render(std::string_view source,
                                                     const ExternalRendererConfig& config) {
    if (config.command_template.empty()) {
        return ExternalError{ExternalErrorKind::Unavailable,
                             "no external renderer command configured"};
    }
    TempDir tmp;
    if (tmp.path.empty()) {
        return ExternalError{ExternalErrorKind::Unavailable,
                             "cannot create temp directory"};
    }
    const fs::path input = tmp.path / "diagram.puml";
    const fs::path output = tmp.path / "diagram.png";
    {
        std::ofstream file(input, std::ios::binary);
        file.write(source.data(), static_cast<std::streamsize>(source.size()));
        if (!file.good()) {
            return ExternalError{ExternalErrorKind::Unavailable,
                                 "cannot write renderer input"};
        }
    }

    std::string command = substitute(config.command_template, "{input}", input.string());
    command = substitute(command, "{output}", output.string());

    pid_t pid = fork();
    if (pid < 0) {
        return ExternalError{ExternalErrorKind::Unavailable, "fork failed"};
    }
    if (pid == 0) {
        setpgid(0, 0);  // own process group so a timeout kill reaps helpers too
        execl("/bin/sh", "sh", "-c", command.c_str(), nullptr);
        _exit(127);
    }

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double>(config.timeout_seconds);
    int status = 0;
    for (;;) {
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid) break;
        if (done < 0) {
            return ExternalError{ExternalErrorKind::Unavailable, "waitpid failed"};
        }
        if (std::chrono::steady_clock::now() >= deadline) {
            kill(-pid, SIGKILL);
            waitpid(pid, &status, 0);
            return ExternalError{ExternalErrorKind::Timeout,
                                 "renderer exceeded " +
                                     std::to_string(config.timeout_seconds) + "s"};
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }

    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code == 127) {
        return ExternalError{ExternalErrorKind::Unavailable,
                             "renderer command not found"};
    }

    RenderOutcome outcome;
    outcome.provenance = "external";
    if (exit_code != 0) {
        outcome.image = error_plate();
        outcome.error = ParseError{ParseErrorCode::ValidationFailed, 0, 1,
                                   "external renderer exited with " +
                                       std::to_string(exit_code)};
        return outcome;
    }
    auto decoded = read_png_gray(output);
    if (!decoded) {
        outcome.image = error_plate();
        outcome.error = ParseError{ParseErrorCode::ValidationFailed, 0, 1,
                                   "external renderer produced no decodable PNG: " +
                                       decoded.error().message};
        return outcome;
    }
    outcome.ok = true;
    outcome.image = std::move(decoded).value();
    return outcome;
}

}  // namespace umlforge
