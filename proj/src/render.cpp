// Copyright (c) 2026 umlforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "umlforge/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "umlforge/validate.hpp"
#include "font5x7.hpp"

namespace umlforge {

namespace {

constexpr int kMargin = 16;
constexpr int kLaneWidth = 160;
constexpr int kRowPitch = 48;
constexpr int kHeaderH = 36;
constexpr int kHeaderBoxW = 120;
constexpr int kNodeHalfW = 80;

constexpr std::uint8_t kInk = 0;
constexpr std::uint8_t kBg = 255;
constexpr std::uint8_t kLifelineGray = 128;
constexpr std::uint8_t kBarFill = 220;
constexpr std::uint8_t kPlateGray = 128;

// ---------------------------------------------------------------------------
// Integer drawing primitives; everything clips through RasterImage::set.
// ---------------------------------------------------------------------------

struct Canvas {
    RasterImage& img;

    void hline(int x0, int x1, int y, std::uint8_t c) {
        if (x1 < x0) std::swap(x0, x1);
        for (int x = x0; x <= x1; ++x) img.set(x, y, c);
    }

    void vline(int x, int y0, int y1, std::uint8_t c) {
        if (y1 < y0) std::swap(y0, y1);
        for (int y = y0; y <= y1; ++y) img.set(x, y, c);
    }

    void dashed_hline(int x0, int x1, int y, std::uint8_t c) {
        if (x1 < x0) std::swap(x0, x1);
        for (int x = x0; x <= x1; ++x) {
            if ((x - x0) % 8 < 4) img.set(x, y, c);
        }
    }

    void line(int x0, int y0, int x1, int y1, std::uint8_t c) {
        int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
        int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
        int err = dx + dy;
        for (;;) {
            img.set(x0, y0, c);
            if (x0 == x1 && y0 == y1) break;
            int e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x0 += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y0 += sy;
            }
        }
    }

    void rect(int x0, int y0, int x1, int y1, std::uint8_t c) {
        hline(x0, x1, y0, c);
        hline(x0, x1, y1, c);
        vline(x0, y0, y1, c);
        vline(x1, y0, y1, c);
    }

    void fill_rect(int x0, int y0, int x1, int y1, std::uint8_t c) {
        for (int y = y0; y <= y1; ++y) hline(x0, x1, y, c);
    }

    void fill_circle(int cx, int cy, int r, std::uint8_t c) {
        for (int dy = -r; dy <= r; ++dy) {
            for (int dx = -r; dx <= r; ++dx) {
                if (dx * dx + dy * dy <= r * r) img.set(cx + dx, cy + dy, c);
            }
        }
    }

    void circle(int cx, int cy, int r, std::uint8_t c) {
        for (int dy = -r; dy <= r; ++dy) {
            for (int dx = -r; dx <= r; ++dx) {
                int d = dx * dx + dy * dy;
                if (d <= r * r && d > (r - 1) * (r - 1)) img.set(cx + dx, cy + dy, c);
            }
        }
    }

    /// Horizontal arrowhead with the tip at (x_tip, y); dir +1 points right.
    void arrowhead(int x_tip, int y, int dir, std::uint8_t c) {
        for (int i = 0; i <= 5; ++i) {
            int half = (i + 1) / 2;
            vline(x_tip - dir * i, y - half, y + half, c);
        }
    }

    static int text_width(std::string_view s, int scale) {
        if (s.empty()) return 0;
        return static_cast<int>(s.size()) * 6 * scale - scale;
    }

    void text(int x, int y, std::string_view s, int scale, std::uint8_t c) {
        for (char ch : s) {
            int idx = static_cast<unsigned char>(ch) - 32;
            for (int col = 0; col < 5; ++col) {
                std::uint8_t bits =
                    (idx >= 0 && idx < 95) ? kFont5x7[idx][col] : 0x7F;
                for (int row = 0; row < 7; ++row) {
                    if (bits & (1u << row)) {
                        fill_rect(x + col * scale, y + row * scale,
                                  x + col * scale + scale - 1,
                                  y + row * scale + scale - 1, c);
                    }
                }
            }
            x += 6 * scale;
        }
    }

    void text_centered(int cx, int y, std::string_view s, int scale,
                       std::uint8_t c, int max_width) {
        std::string clipped(s);
        std::size_t max_chars = static_cast<std::size_t>(
            std::max(1, max_width / (6 * scale)));
        if (clipped.size() > max_chars) clipped.resize(max_chars);
        text(cx - text_width(clipped, scale) / 2, y, clipped, scale, c);
    }
};

// ---------------------------------------------------------------------------
// Sequence layout
// ---------------------------------------------------------------------------

struct SeqLayout {
    std::vector<std::string> order;  // first-appearance participant order
    std::map<std::string, int> lane;
    std::map<std::string, std::string> label;  // display name or identifier

    void add(const std::string& name) {
        if (lane.count(name)) return;
        lane[name] = static_cast<int>(order.size());
        label[name] = name;
        order.push_back(name);
    }

    void collect(const SeqBody& body) {
        for (const SeqElement& el : body) {
            if (const auto* p = std::get_if<ParticipantDecl>(&el.node)) {
                add(p->name);
                if (p->display) label[p->name] = *p->display;
            } else if (const auto* m = std::get_if<Message>(&el.node)) {
                add(m->from);
                add(m->to);
            } else if (const auto* a = std::get_if<Activate>(&el.node)) {
                add(a->target);
            } else if (const auto* d = std::get_if<Deactivate>(&el.node)) {
                add(d->target);
            } else if (const auto* alt = std::get_if<AltBlock>(&el.node)) {
                for (const AltBranch& b : alt->branches) collect(b.body);
            }
        }
    }

    int cx(const std::string& name) const {
        return kMargin + lane.at(name) * kLaneWidth + kLaneWidth / 2;
    }
};

int count_seq_rows(const SeqBody& body) {
    int rows = 0;
    for (const SeqElement& el : body) {
        if (std::holds_alternative<Message>(el.node) ||
            std::holds_alternative<Activate>(el.node) ||
            std::holds_alternative<Deactivate>(el.node)) {
            ++rows;
        } else if (const auto* alt = std::get_if<AltBlock>(&el.node)) {
            rows += 2;  // header and end
            for (std::size_t i = 0; i < alt->branches.size(); ++i) {
                if (i > 0) ++rows;  // else separator
                rows += count_seq_rows(alt->branches[i].body);
            }
        }
    }
    return rows;
}

struct SeqRenderer {
    Canvas& canvas;
    const SeqLayout& layout;
    int content_width;
    int bottom_y;
    int row = 0;

    struct OpenBar {
        int lane_cx;
        int level;
        int y_top;
    };
    std::map<std::string, std::vector<OpenBar>> open;
    struct BarSpan {
        int x;
        int y_top;
        int y_bot;
    };
    std::vector<BarSpan> bars;

    // Deferred ink so activation bars can be drawn underneath.
    struct MessageOp {
        Message msg;
        int y;
    };
    std::vector<MessageOp> messages;
    struct FrameOp {
        int x0, x1, y0, y1;
    };
    std::vector<FrameOp> frames;
    struct SeparatorOp {
        int x0, x1, y;
        std::string text;
    };
    std::vector<SeparatorOp> separators;
    struct TextOp {
        int x, y;
        std::string text;
    };
    std::vector<TextOp> texts;

    int row_y(int r) const { return kMargin + kHeaderH + 24 + r * kRowPitch; }

    void walk(const SeqBody& body, int depth) {
        for (const SeqElement& el : body) {
            if (const auto* m = std::get_if<Message>(&el.node)) {
                messages.push_back({*m, row_y(row)});
                ++row;
            } else if (const auto* a = std::get_if<Activate>(&el.node)) {
                auto& stack = open[a->target];
                stack.push_back({layout.cx(a->target),
                                 static_cast<int>(stack.size()), row_y(row) - 12});
                ++row;
            } else if (const auto* d = std::get_if<Deactivate>(&el.node)) {
                auto& stack = open[d->target];
                if (!stack.empty()) {
                    OpenBar bar = stack.back();
                    stack.pop_back();
                    bars.push_back(
                        {bar.lane_cx - 4 + bar.level * 3, bar.y_top, row_y(row)});
                }
                ++row;
            } else if (const auto* alt = std::get_if<AltBlock>(&el.node)) {
                int x0 = kMargin + 4 + depth * 8;
                int x1 = content_width - kMargin - 4 - depth * 8;
                int y_header = row_y(row);
                texts.push_back({x0 + 4, y_header - 16,
                                 "alt " + alt->branches.front().guard});
                ++row;
                for (std::size_t i = 0; i < alt->branches.size(); ++i) {
                    if (i > 0) {
                        int y_else = row_y(row);
                        separators.push_back({x0, x1, y_else - 20,
                                              "else " + alt->branches[i].guard});
                        ++row;
                    }
                    walk(alt->branches[i].body, depth + 1);
                }
                int y_end = row_y(row);
                ++row;
                frames.push_back({x0, x1, y_header - 20, y_end - 20});
            }
            // ParticipantDecl consumes no row.
        }
    }

    void finish_open_bars() {
        for (auto& [name, stack] : open) {
            for (const OpenBar& bar : stack) {
                bars.push_back({bar.lane_cx - 4 + bar.level * 3, bar.y_top,
                                bottom_y});
            }
        }
    }

    void draw() {
        // Participant boxes and lifelines.
        for (const std::string& name : layout.order) {
            int cx = layout.cx(name);
            canvas.vline(cx, kMargin + kHeaderH, bottom_y, kLifelineGray);
            canvas.fill_rect(cx - kHeaderBoxW / 2, kMargin, cx + kHeaderBoxW / 2,
                             kMargin + kHeaderH - 4, kBg);
            canvas.rect(cx - kHeaderBoxW / 2, kMargin, cx + kHeaderBoxW / 2,
                        kMargin + kHeaderH - 4, kInk);
            canvas.text_centered(cx, kMargin + (kHeaderH - 4) / 2 - 3,
                                 layout.label.at(name), 1, kInk, kHeaderBoxW - 8);
        }
        for (const BarSpan& bar : bars) {
            canvas.fill_rect(bar.x, bar.y_top, bar.x + 8, bar.y_bot, kBarFill);
            canvas.rect(bar.x, bar.y_top, bar.x + 8, bar.y_bot, kInk);
        }
        for (const FrameOp& f : frames) canvas.rect(f.x0, f.y0, f.x1, f.y1, kInk);
        for (const SeparatorOp& s : separators) {
            canvas.dashed_hline(s.x0, s.x1, s.y, kInk);
            canvas.text(s.x0 + 4, s.y + 4, s.text, 1, kInk);
        }
        for (const TextOp& t : texts) canvas.text(t.x, t.y, t.text, 1, kInk);
        for (const MessageOp& op : messages) draw_message(op);
    }

    void draw_message(const MessageOp& op) {
        int from_x = layout.cx(op.msg.from);
        int to_x = layout.cx(op.msg.to);
        int y = op.y;
        if (from_x == to_x) {
            // Self message: a small loop out to the right.
            canvas.hline(from_x, from_x + 24, y - 8, kInk);
            canvas.vline(from_x + 24, y - 8, y, kInk);
            canvas.hline(from_x + 6, from_x + 24, y, kInk);
            canvas.arrowhead(from_x + 6, y, -1, kInk);
            if (!op.msg.label.empty()) {
                canvas.text(from_x + 30, y - 11, op.msg.label, 1, kInk);
            }
            return;
        }
        int dir = to_x > from_x ? 1 : -1;
        if (op.msg.arrow == ArrowKind::Solid) {
            canvas.hline(from_x, to_x - dir, y, kInk);
        } else {
            canvas.dashed_hline(std::min(from_x, to_x), std::max(from_x, to_x) - 1, y,
                                kInk);
        }
        canvas.arrowhead(to_x - dir, y, dir, kInk);
        if (!op.msg.label.empty()) {
            canvas.text_centered((from_x + to_x) / 2, y - 12, op.msg.label, 1, kInk,
                                 std::abs(to_x - from_x) + kLaneWidth / 2);
        }
    }
};

void render_sequence(RasterImage& img, const SeqBody& body, int content_width,
                     int content_height) {
    SeqLayout layout;
    layout.collect(body);
    Canvas canvas{img};
    SeqRenderer renderer{canvas, layout, content_width,
                         content_height - kMargin};
    renderer.walk(body, 0);
    renderer.finish_open_bars();
    renderer.draw();
}

void measure_sequence(const SeqBody& body, int& width, int& height) {
    SeqLayout layout;
    layout.collect(body);
    int lanes = static_cast<int>(layout.order.size());
    int rows = count_seq_rows(body);
    width = 2 * kMargin + std::max(lanes, 1) * kLaneWidth;
    height = 2 * kMargin + kHeaderH + 24 + rows * kRowPitch + 24;
}

// ---------------------------------------------------------------------------
// Activity layout
// ---------------------------------------------------------------------------

struct Extent {
    int wl = 0;  // extent left of the spine
    int wr = 0;  // extent right of the spine
    int h = 0;
};

Extent measure_act_body(const ActBody& body);

Extent measure_act_element(const ActElement& el) {
    if (std::holds_alternative<Start>(el.node) ||
        std::holds_alternative<Stop>(el.node)) {
        return {12, 12, kRowPitch};
    }
    if (std::holds_alternative<Action>(el.node)) {
        return {kNodeHalfW, kNodeHalfW, kRowPitch};
    }
    if (const auto* d = std::get_if<Decision>(&el.node)) {
        Extent then_ext = measure_act_body(d->then_body);
        Extent ext;
        ext.wl = std::max(kNodeHalfW, then_ext.wl);
        if (d->else_branch) {
            Extent else_ext = measure_act_body(d->else_branch->body);
            int else_offset = std::max(kNodeHalfW, then_ext.wr) + 24 + else_ext.wl;
            ext.wr = std::max(kNodeHalfW, else_offset + else_ext.wr);
            ext.h = 48 + std::max(then_ext.h, else_ext.h) + 24;
        } else {
            int bypass_x = std::max(kNodeHalfW, then_ext.wr) + 20;
            ext.wr = bypass_x + 4;
            ext.h = 48 + then_ext.h + 24;
        }
        return ext;
    }
    const auto& fork = std::get<Fork>(el.node);
    int total_w = 0;
    int max_h = 0;
    for (const ActBody& branch : fork.branches) {
        Extent b = measure_act_body(branch);
        total_w += b.wl + b.wr;
        max_h = std::max(max_h, b.h);
    }
    if (fork.branches.size() > 1) {
        total_w += 24 * (static_cast<int>(fork.branches.size()) - 1);
    }
    Extent ext;
    ext.wl = total_w / 2 + 2;
    ext.wr = total_w - total_w / 2 + 2;
    ext.h = 32 + max_h;
    return ext;
}

Extent measure_act_body(const ActBody& body) {
    Extent ext{8, 8, 0};
    for (const ActElement& el : body) {
        Extent e = measure_act_element(el);
        ext.wl = std::max(ext.wl, e.wl);
        ext.wr = std::max(ext.wr, e.wr);
        ext.h += e.h;
    }
    return ext;
}

struct ActRenderer {
    Canvas& canvas;

    void draw_body(const ActBody& body, int spine_x, int y) {
        for (const ActElement& el : body) {
            Extent e = measure_act_element(el);
            draw_element(el, spine_x, y, e);
            y += e.h;
        }
    }

    void draw_element(const ActElement& el, int sx, int y, const Extent& ext) {
        if (std::holds_alternative<Start>(el.node)) {
            canvas.fill_circle(sx, y + 20, 8, kInk);
            canvas.vline(sx, y + 28, y + kRowPitch, kInk);
            return;
        }
        if (std::holds_alternative<Stop>(el.node)) {
            canvas.vline(sx, y, y + 10, kInk);
            canvas.circle(sx, y + 26, 10, kInk);
            canvas.fill_circle(sx, y + 26, 5, kInk);
            return;
        }
        if (const auto* a = std::get_if<Action>(&el.node)) {
            canvas.vline(sx, y, y + 8, kInk);
            draw_rounded_box(sx - kNodeHalfW, y + 8, sx + kNodeHalfW, y + 40);
            canvas.text_centered(sx, y + 21, a->label, 1, kInk, 2 * kNodeHalfW - 12);
            canvas.vline(sx, y + 40, y + kRowPitch, kInk);
            return;
        }
        if (const auto* d = std::get_if<Decision>(&el.node)) {
            draw_decision(*d, sx, y, ext);
            return;
        }
        draw_fork(std::get<Fork>(el.node), sx, y, ext);
    }

    void draw_rounded_box(int x0, int y0, int x1, int y1) {
        canvas.fill_rect(x0, y0, x1, y1, kBg);
        canvas.hline(x0 + 4, x1 - 4, y0, kInk);
        canvas.hline(x0 + 4, x1 - 4, y1, kInk);
        canvas.vline(x0, y0 + 4, y1 - 4, kInk);
        canvas.vline(x1, y0 + 4, y1 - 4, kInk);
        canvas.line(x0, y0 + 4, x0 + 4, y0, kInk);
        canvas.line(x1 - 4, y0, x1, y0 + 4, kInk);
        canvas.line(x0, y1 - 4, x0 + 4, y1, kInk);
        canvas.line(x1 - 4, y1, x1, y1 - 4, kInk);
    }

    void draw_decision(const Decision& d, int sx, int y, const Extent& ext) {
        Extent then_ext = measure_act_body(d.then_body);
        canvas.vline(sx, y, y + 4, kInk);
        // Diamond between y+4 and y+44.
        canvas.line(sx, y + 4, sx - kNodeHalfW, y + 24, kInk);
        canvas.line(sx, y + 4, sx + kNodeHalfW, y + 24, kInk);
        canvas.line(sx - kNodeHalfW, y + 24, sx, y + 44, kInk);
        canvas.line(sx + kNodeHalfW, y + 24, sx, y + 44, kInk);
        canvas.text_centered(sx, y + 18, d.condition, 1, kInk, 2 * kNodeHalfW - 32);
        canvas.text(sx + 6, y + 46, d.then_label, 1, kInk);

        int branch_top = y + 48;
        int merge_y;
        if (d.else_branch) {
            Extent else_ext = measure_act_body(d.else_branch->body);
            int region_h = std::max(then_ext.h, else_ext.h);
            merge_y = branch_top + region_h + 12;
            int else_x = sx + std::max(kNodeHalfW, then_ext.wr) + 24 + else_ext.wl;
            canvas.hline(sx + kNodeHalfW, else_x, y + 24, kInk);
            canvas.text(sx + kNodeHalfW + 4, y + 14, d.else_branch->label, 1, kInk);
            canvas.vline(else_x, y + 24, branch_top, kInk);
            draw_body(d.else_branch->body, else_x, branch_top);
            canvas.vline(else_x, branch_top + else_ext.h, merge_y, kInk);
            canvas.hline(sx, else_x, merge_y, kInk);
        } else {
            int bypass_x = sx + std::max(kNodeHalfW, then_ext.wr) + 20;
            merge_y = branch_top + then_ext.h + 12;
            canvas.hline(sx + kNodeHalfW, bypass_x, y + 24, kInk);
            canvas.vline(bypass_x, y + 24, merge_y, kInk);
            canvas.hline(sx, bypass_x, merge_y, kInk);
        }
        canvas.vline(sx, y + 44, branch_top, kInk);
        draw_body(d.then_body, sx, branch_top);
        canvas.vline(sx, branch_top + then_ext.h, merge_y, kInk);
        canvas.vline(sx, merge_y, y + ext.h, kInk);
    }

    void draw_fork(const Fork& fork, int sx, int y, const Extent& ext) {
        std::vector<Extent> branch_ext;
        int total_w = 0;
        int max_h = 0;
        for (const ActBody& branch : fork.branches) {
            branch_ext.push_back(measure_act_body(branch));
            total_w += branch_ext.back().wl + branch_ext.back().wr;
            max_h = std::max(max_h, branch_ext.back().h);
        }
        if (fork.branches.size() > 1) {
            total_w += 24 * (static_cast<int>(fork.branches.size()) - 1);
        }

        canvas.vline(sx, y, y + 2, kInk);
        int left = sx - total_w / 2;
        std::vector<int> spines;
        int cursor = left;
        for (const Extent& b : branch_ext) {
            spines.push_back(cursor + b.wl);
            cursor += b.wl + b.wr + 24;
        }
        int bar_x0 = spines.empty() ? sx - 8 : std::min(spines.front(), sx) - 8;
        int bar_x1 = spines.empty() ? sx + 8 : std::max(spines.back(), sx) + 8;
        canvas.fill_rect(bar_x0, y + 2, bar_x1, y + 8, kInk);

        int branch_top = y + 16;
        int join_top = branch_top + max_h + 8;
        for (std::size_t i = 0; i < fork.branches.size(); ++i) {
            canvas.vline(spines[i], y + 8, branch_top, kInk);
            draw_body(fork.branches[i], spines[i], branch_top);
            canvas.vline(spines[i], branch_top + branch_ext[i].h, join_top, kInk);
        }
        canvas.fill_rect(bar_x0, join_top, bar_x1, join_top + 6, kInk);
        canvas.vline(sx, join_top + 6, y + ext.h, kInk);
    }
};

void measure_activity(const ActBody& body, int& width, int& height, int& spine) {
    Extent ext = measure_act_body(body);
    width = 2 * kMargin + ext.wl + ext.wr;
    height = 2 * kMargin + ext.h;
    spine = kMargin + ext.wl;
}

}  // namespace

Result<RasterImage, RenderError> render_ast(const DiagramAst& ast,
                                            const RenderOptions& options) {
    int content_w = 0;
    int content_h = 0;
    int spine = 0;
    if (ast.kind() == DiagramKind::Sequence) {
        measure_sequence(ast.sequence(), content_w, content_h);
    } else {
        measure_activity(ast.activity(), content_w, content_h, spine);
    }

    int canvas_w = options.canvas_width > 0 ? options.canvas_width : content_w;
    int canvas_h = options.canvas_height > 0 ? options.canvas_height : content_h;
    if (canvas_w < content_w || canvas_h < content_h) {
        return RenderError{"canvas too small: content needs " +
                           std::to_string(content_w) + "x" +
                           std::to_string(content_h)};
    }

    RasterImage img = RasterImage::filled(canvas_w, canvas_h, kBg);
    if (ast.kind() == DiagramKind::Sequence) {
        render_sequence(img, ast.sequence(), content_w, content_h);
    } else {
        Canvas canvas{img};
        ActRenderer{canvas}.draw_body(ast.activity(), spine, kMargin);
    }
    return img;
}

RasterImage error_plate() {
    RasterImage plate = RasterImage::filled(512, 512, kPlateGray);
    Canvas canvas{plate};
    canvas.text_centered(256, (512 - 7 * 3) / 2, "SYNTAX ERROR", 3, kInk, 512);
    return plate;
}

RenderOutcome render_candidate(std::string_view source) {
    RenderOutcome outcome;
    auto parsed = parse(source);
    if (!parsed) {
        outcome.image = error_plate();
        outcome.error = parsed.error();
        return outcome;
    }
    std::vector<Violation> violations = validate(parsed.value());
    if (!violations.empty()) {
        outcome.image = error_plate();
        std::string detail = "invalid diagram:";
        for (const Violation& v : violations) {
            detail += std::string(" ") + to_string(v.code);
        }
        outcome.error = ParseError{ParseErrorCode::ValidationFailed, 0, 1, detail};
        return outcome;
    }
    auto rendered = render_ast(parsed.value());
    if (!rendered) {
        outcome.image = error_plate();
        outcome.error = ParseError{ParseErrorCode::ValidationFailed, 0, 1,
                                   rendered.error().message};
        return outcome;
    }
    outcome.ok = true;
    outcome.image = std::move(rendered).value();
    return outcome;
}

}  // namespace umlforge
