/*
 * This file was automatically generated by EvoSuite
 */

package com.example.text;

import org.junit.Test;
import static org.junit.Assert.*;
import static org.evosuite.runtime.EvoAssertions.*;
import org.evosuite.runtime.EvoRunner;
import org.evosuite.runtime.EvoRunnerParameters;
import org.junit.runner.RunWith;

@RunWith(EvoRunner.class) @EvoRunnerParameters(mockJVMNonDeterminism = true)
public class TextUtil_ESTest extends TextUtil_ESTest_scaffolding {

  @Test(timeout = 4000)
  public void test00()  throws Throwable  {
      String string0 = TextUtil.reverse("abc");
      assertEquals("cba", string0);
  }

  @Test(timeout = 4000)
  public void test01()  throws Throwable  {
      // Undeclared exception!
      try { 
        TextUtil.reverse((String) null);
        fail("Expecting exception: NullPointerException");
      
      } catch(NullPointerException e) {
         //
         // no message in exception (getMessage() returned null)
         //
         verifyException("java.lang.StringBuilder", e);
      }
  }

  @Test(timeout = 4000)
  public void test02()  throws Throwable  {
      int int0 = TextUtil.countWords("  two words ");
      assertEquals(2, int0);
  }

  @Test(timeout = 4000)
  public void test03()  throws Throwable  {
      int int0 = TextUtil.countWords((String) null);
      assertEquals(0, int0);
      int int1 = TextUtil.countWords("");
      assertEquals(int0, int1);
  }

  @Test(timeout = 4000)
  public void test04()  throws Throwable  {
      // Undeclared exception!
      try { 
        TextUtil.repeat("ab", (-1));
        fail("Expecting exception: IllegalArgumentException");
      
      } catch(IllegalArgumentException e) {
         //
         // times < 0: -1
         //
         verifyException("com.example.text.TextUtil", e);
      }
  }

  @Test(timeout = 4000)
  public void test05()  throws Throwable  {
      String string0 = TextUtil.repeat("ab", 3);
      assertEquals("ababab", string0);
      assertEquals(6, string0.length());
  }

  @Test(timeout = 4000)
  public void test06()  throws Throwable  {
      String[] stringArray0 = new String[3];
      stringArray0[0] = "a";
      stringArray0[1] = "b";
      stringArray0[2] = "c";
      String string0 = TextUtil.join(stringArray0, "-");
      assertEquals("a-b-c", string0);
  }

  @Test(timeout = 4000)
  public void test07()  throws Throwable  {
      String[] stringArray0 = new String[0];
      String string0 = TextUtil.join(stringArray0, ",");
      assertNotNull(string0);
  }

  @Test(timeout = 4000)
  public void test08()  throws Throwable  {
      boolean boolean0 = TextUtil.isPalindrome("level");
      assertTrue(boolean0);
  }

  @Test(timeout = 4000)
  public void test09()  throws Throwable  {
      boolean boolean0 = TextUtil.isPalindrome("ab");
      assertFalse(boolean0);
  }

  @Test(timeout = 4000)
  public void test10()  throws Throwable  {
      // Undeclared exception!
      try { 
        TextUtil.first("");
        fail("Expecting exception: StringIndexOutOfBoundsException");
      
      } catch(StringIndexOutOfBoundsException e) {
      }
  }

  @Test(timeout = 4000)
  public void test11()  throws Throwable  {
      char char0 = TextUtil.first("xyz");
      assertEquals('x', char0);
  }

  @Test(timeout = 4000)
  public void test12()  throws Throwable  {
      TextUtil.reverse("");
  }

  @Test(timeout = 4000)
  public void test13()  throws Throwable  {
      String string0 = TextUtil.repeat("", 0);
      for (int i = 0; i < 2; i++) {
        string0 = string0 + i;
      }
      assertEquals("01", string0);
  }
}
