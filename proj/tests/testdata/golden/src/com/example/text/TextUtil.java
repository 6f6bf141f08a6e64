package com.example.text;

/**
 * Small string helpers.
 */
public final class TextUtil {
  private TextUtil() {}

  /**
   * Reverses a string.
   * @param s input, must not be null
   * @return the reversed string
   * @throws NullPointerException if s is null
   */
  public static String reverse(String s) {
    return new StringBuilder(s).reverse().toString();
  }

  /**
   * Counts whitespace separated words.
   * @param s input text; null counts as empty
   * @return number of words
   */
  public static int countWords(String s) {
    if (s == null || s.trim().isEmpty()) {
      return 0;
    }
    return s.trim().split("\\s+").length;
  }

  /**
   * Repeats a string.
   * @param s the string
   * @param times how often
   * @return the repetition
   * @throws IllegalArgumentException if times is negative
   */
  public static String repeat(String s, int times) {
    if (times < 0) {
      throw new IllegalArgumentException("times < 0: " + times);
    }
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < times; i++) {
      sb.append(s);
    }
    return sb.toString();
  }

  /**
   * Joins parts with a separator.
   */
  public static String join(String[] parts, String separator) {
    return String.join(separator, parts);
  }

  public static boolean isPalindrome(String s) {
    return s.equals(reverse(s));
  }

  /**
   * Splits a line into its first character and the rest.
   * @throws StringIndexOutOfBoundsException if the line is empty
   */
  public static char first(String line) {
    return line.charAt(0);
  }
}
