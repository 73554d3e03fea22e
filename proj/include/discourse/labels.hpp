#pragma once

#include <string>

#include "discourse/util.hpp"

namespace discourse {

enum class SentClass { negative, neutral, positive };
enum class AuthorRole { student, teacher, parent, other };
enum class Task { sentiment, author };

inline const char* to_string(SentClass c) {
    switch (c) {
        case SentClass::negative: return "negative";
        case SentClass::neutral: return "neutral";
        case SentClass::positive: return "positive";
    }
    return "?";
}

inline const char* to_string(AuthorRole r) {
    switch (r) {
        case AuthorRole::student: return "student";
        case AuthorRole::teacher: return "teacher";
        case AuthorRole::parent: return "parent";
        case AuthorRole::other: return "other";
    }
    return "?";
}

inline const char* to_string(Task t) {
    return t == Task::sentiment ? "sentiment" : "author";
}

SentClass parse_sent_class(const std::string& s);
AuthorRole parse_author_role(const std::string& s);
Task parse_task(const std::string& s);

// Canonical label ordering used by confusion matrices and reports.
const std::vector<std::string>& task_labels(Task t);

} // namespace discourse
